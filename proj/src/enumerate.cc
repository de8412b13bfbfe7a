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

#include "census/enumerate.h"

#include <algorithm>

namespace census {

// A term of size n has openness at most n, so bounds are clamped to the size
// and a bound equal to the size means unbounded. The recursion depth is
// bounded by the size, which is small for an oracle.
const std::vector<Term>& Enumerator::Terms(int size,
                                           std::optional<int> max_openness) {
  static const std::vector<Term> kEmpty;
  if (size < 1) return kEmpty;
  const int bound = std::min(max_openness.value_or(size), size);
  if (auto it = memo_.find({size, bound}); it != memo_.end()) {
    return it->second;
  }

  std::vector<Term> out;
  if (size - 1 < bound) out.push_back(Term::Index(size - 1));
  if (size >= 2) {
    for (const Term& body : Terms(size - 1, bound + 1)) {
      out.push_back(Term::Abs(body));
    }
  }
  for (int l = 1; l + 1 < size; ++l) {
    const std::vector<Term>& lefts = Terms(l, bound);
    const std::vector<Term>& rights = Terms(size - 1 - l, bound);
    for (const Term& a : lefts) {
      for (const Term& b : rights) out.push_back(Term::App(a, b));
    }
  }
  return memo_.emplace(std::make_pair(size, bound), std::move(out))
      .first->second;
}

std::vector<Term> Enumerate(int size, std::optional<int> max_openness) {
  Enumerator e;
  return e.Terms(size, max_openness);
}

}  // namespace census
