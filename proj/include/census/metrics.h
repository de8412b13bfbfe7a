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

#ifndef CENSUS_METRICS_H_
#define CENSUS_METRICS_H_

#include <cstdint>
#include <vector>

#include "census/term.h"

namespace census {

struct TermMetrics {
  std::uint64_t size = 0;
  std::uint64_t variables = 0;
  std::uint64_t abstractions = 0;
  std::uint64_t applications = 0;
  std::uint64_t successors = 0;
  std::uint64_t redexes = 0;
  std::uint64_t head_abstractions = 0;
  std::uint64_t openness = 0;
  // Openness for open terms; minus the number of removable non-binding head
  // abstractions for closed ones.
  std::int64_t generalized_openness = 0;

  bool operator==(const TermMetrics&) const = default;
};

// Per-node bottom-up facts, indexed by preorder position.
struct SubtermTable {
  std::vector<std::uint64_t> size;
  std::vector<std::uint64_t> openness;
  std::vector<std::uint8_t> normal;
};

SubtermTable ComputeSubterms(const Term& t);
TermMetrics ComputeMetrics(const Term& t);
TermMetrics ComputeMetrics(const Term& t, const SubtermTable& table);

std::uint64_t Openness(const Term& t);
std::int64_t GeneralizedOpenness(const Term& t);
std::uint64_t HeadAbstractions(const Term& t);
bool IsNormalForm(const Term& t);
bool IsNeutral(const Term& t);

}  // namespace census

#endif  // CENSUS_METRICS_H_
