// Copyright 2026 The Census Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CENSUS_ENUMERATE_H_
#define CENSUS_ENUMERATE_H_

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "census/term.h"

namespace census {

// Exhaustive generator of all terms of a given size whose openness is at most
// `max_openness` (nullopt for no bound). Order: the index, then abstractions,
// then applications by ascending left size. Intended as a brute-force oracle
// for small sizes; memory grows with the number of terms.
class Enumerator {
 public:
  const std::vector<Term>& Terms(int size, std::optional<int> max_openness);

 private:
  std::map<std::pair<int, int>, std::vector<Term>> memo_;
};

std::vector<Term> Enumerate(int size, std::optional<int> max_openness);

}  // namespace census

#endif  // CENSUS_ENUMERATE_H_
