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

#ifndef CENSUS_STATISTICS_H_
#define CENSUS_STATISTICS_H_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "census/metrics.h"
#include "census/term.h"
#include "json.hpp"

namespace census {

struct Fraction {
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;

  double value() const {
    return static_cast<double>(numerator) / static_cast<double>(denominator);
  }
  bool operator==(const Fraction&) const = default;
};

enum class HeightKind { kUnary, kNatural };

// Histogram slots follow NodeKind: index, abstraction, application.
using Histogram = std::map<std::uint64_t, std::uint64_t>;
using KindHistograms = std::array<Histogram, 3>;

struct BindingStats {
  std::optional<Fraction> binding_fraction;  // empty without abstractions
  std::uint64_t max_bound = 0;
};

struct ParameterReport {
  TermMetrics metrics;
  std::uint64_t lo_cost = 0;
  std::uint64_t free_variable_occurrences = 0;
  Fraction open_subterm_fraction;
  std::optional<Fraction> binding_abstraction_fraction;
  std::uint64_t max_bound_per_abstraction = 0;
  Histogram index_value_histogram;
  KindHistograms unary_height_histograms;
  KindHistograms natural_height_histograms;
};

std::uint64_t LoCost(const Term& t);
std::uint64_t FreeVariableOccurrences(const Term& t);
Fraction OpenSubtermFraction(const Term& t);
BindingStats ComputeBindingStats(const Term& t);
KindHistograms HeightProfile(const Term& t, HeightKind height);

ParameterReport Measure(const Term& t);

nlohmann::json ReportToJson(const ParameterReport& r);
// Rows `level,kind,count` for both height measures, with a header line.
std::string HeightHistogramCsv(const ParameterReport& r, HeightKind height);

const char* KindName(NodeKind kind);

}  // namespace census

#endif  // CENSUS_STATISTICS_H_
