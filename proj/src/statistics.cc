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

#include "census/statistics.h"

#include <algorithm>
#include <vector>

namespace census {
namespace {

struct Depths {
  std::vector<std::uint32_t> unary;
  std::vector<std::uint32_t> natural;
};

// Parents precede children in preorder, so depths propagate forward.
Depths ComputeDepths(const Term& t) {
  Depths d;
  const std::size_t n = t.node_count();
  d.unary.assign(n, 0);
  d.natural.assign(n, 0);
  for (std::size_t p = 0; p < n; ++p) {
    switch (t.kind(p)) {
      case NodeKind::kIndex:
        break;
      case NodeKind::kAbs:
        d.unary[p + 1] = d.unary[p] + 1;
        d.natural[p + 1] = d.natural[p] + 1;
        break;
      case NodeKind::kApp: {
        const std::size_t r = t.Right(p);
        d.unary[p + 1] = d.unary[r] = d.unary[p];
        d.natural[p + 1] = d.natural[r] = d.natural[p] + 1;
        break;
      }
    }
  }
  return d;
}

std::uint64_t LoCost(const Term& t, const SubtermTable& table) {
  std::uint64_t cost = 0;
  std::size_t p = 0;
  while (true) {
    switch (t.kind(p)) {
      case NodeKind::kIndex:
        return cost + 1;
      case NodeKind::kAbs:
        ++cost;
        p = p + 1;
        break;
      case NodeKind::kApp: {
        const std::size_t l = t.Left(p);
        if (t.kind(l) == NodeKind::kAbs) return cost + 2;
        if (table.normal[l]) {
          cost += 1 + table.size[l];
          p = t.Right(p);
        } else {
          cost += 1;
          p = l;
        }
        break;
      }
    }
  }
}

Fraction OpenSubtermFraction(const Term& t, const SubtermTable& table) {
  Fraction f{0, t.node_count()};
  for (std::uint64_t o : table.openness) f.numerator += o > 0;
  return f;
}

struct BindingPass {
  std::uint64_t free_occurrences = 0;
  BindingStats stats;
};

BindingPass RunBindingPass(const Term& t, const Depths& depths) {
  BindingPass out;
  std::vector<std::size_t> chain;  // chain[k]: λ ancestor at unary depth k
  std::vector<std::uint64_t> bound(t.node_count(), 0);
  std::uint64_t abstractions = 0;
  for (std::size_t p = 0; p < t.node_count(); ++p) {
    const std::uint32_t d = depths.unary[p];
    switch (t.kind(p)) {
      case NodeKind::kAbs:
        ++abstractions;
        if (chain.size() <= d) chain.resize(d + 1);
        chain[d] = p;
        break;
      case NodeKind::kIndex: {
        const IndexValue v = t.node(p).value;
        if (v >= d) {
          ++out.free_occurrences;
        } else {
          ++bound[chain[d - 1 - v]];
        }
        break;
      }
      case NodeKind::kApp:
        break;
    }
  }
  if (abstractions > 0) {
    Fraction f{0, abstractions};
    for (std::size_t p = 0; p < t.node_count(); ++p) {
      if (t.kind(p) != NodeKind::kAbs) continue;
      f.numerator += bound[p] > 0;
      out.stats.max_bound = std::max(out.stats.max_bound, bound[p]);
    }
    out.stats.binding_fraction = f;
  }
  return out;
}

KindHistograms Bucket(const Term& t, const std::vector<std::uint32_t>& level) {
  KindHistograms h;
  for (std::size_t p = 0; p < t.node_count(); ++p) {
    ++h[static_cast<int>(t.kind(p))][level[p]];
  }
  return h;
}

nlohmann::json HistogramJson(const Histogram& h) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [k, v] : h) rows.push_back({k, v});
  return rows;
}

nlohmann::json KindHistogramsJson(const KindHistograms& h) {
  nlohmann::json out = nlohmann::json::object();
  for (int k = 0; k < 3; ++k) {
    out[KindName(static_cast<NodeKind>(k))] = HistogramJson(h[k]);
  }
  return out;
}

nlohmann::json FractionJson(const Fraction& f) {
  return {{"numerator", f.numerator},
          {"denominator", f.denominator},
          {"value", f.value()}};
}

}  // namespace

const char* KindName(NodeKind kind) {
  switch (kind) {
    case NodeKind::kIndex:
      return "variable";
    case NodeKind::kAbs:
      return "abstraction";
    case NodeKind::kApp:
      return "application";
  }
  return "";
}

std::uint64_t LoCost(const Term& t) { return LoCost(t, ComputeSubterms(t)); }

std::uint64_t FreeVariableOccurrences(const Term& t) {
  return RunBindingPass(t, ComputeDepths(t)).free_occurrences;
}

Fraction OpenSubtermFraction(const Term& t) {
  return OpenSubtermFraction(t, ComputeSubterms(t));
}

BindingStats ComputeBindingStats(const Term& t) {
  return RunBindingPass(t, ComputeDepths(t)).stats;
}

KindHistograms HeightProfile(const Term& t, HeightKind height) {
  const Depths d = ComputeDepths(t);
  return Bucket(t, height == HeightKind::kUnary ? d.unary : d.natural);
}

ParameterReport Measure(const Term& t) {
  const SubtermTable table = ComputeSubterms(t);
  const Depths depths = ComputeDepths(t);
  ParameterReport r;
  r.metrics = ComputeMetrics(t, table);
  r.lo_cost = LoCost(t, table);
  const BindingPass binding = RunBindingPass(t, depths);
  r.free_variable_occurrences = binding.free_occurrences;
  r.open_subterm_fraction = OpenSubtermFraction(t, table);
  r.binding_abstraction_fraction = binding.stats.binding_fraction;
  r.max_bound_per_abstraction = binding.stats.max_bound;
  for (const Node& n : t.nodes()) {
    if (n.kind == NodeKind::kIndex) ++r.index_value_histogram[n.value];
  }
  r.unary_height_histograms = Bucket(t, depths.unary);
  r.natural_height_histograms = Bucket(t, depths.natural);
  return r;
}

nlohmann::json ReportToJson(const ParameterReport& r) {
  const TermMetrics& m = r.metrics;
  nlohmann::json j = {
      {"size", m.size},
      {"variables", m.variables},
      {"abstractions", m.abstractions},
      {"applications", m.applications},
      {"successors", m.successors},
      {"redexes", m.redexes},
      {"head_abstractions", m.head_abstractions},
      {"openness", m.openness},
      {"generalized_openness", m.generalized_openness},
      {"lo_cost", r.lo_cost},
      {"free_variable_occurrences", r.free_variable_occurrences},
      {"open_subterm_fraction", FractionJson(r.open_subterm_fraction)},
      {"max_bound_per_abstraction", r.max_bound_per_abstraction},
      {"index_value_histogram", HistogramJson(r.index_value_histogram)},
      {"unary_height_histograms", KindHistogramsJson(r.unary_height_histograms)},
      {"natural_height_histograms",
       KindHistogramsJson(r.natural_height_histograms)},
  };
  j["binding_abstraction_fraction"] =
      r.binding_abstraction_fraction
          ? FractionJson(*r.binding_abstraction_fraction)
          : nlohmann::json("undefined");
  return j;
}

std::string HeightHistogramCsv(const ParameterReport& r, HeightKind height) {
  const KindHistograms& h = height == HeightKind::kUnary
                                ? r.unary_height_histograms
                                : r.natural_height_histograms;
  std::string out = "level,kind,count\n";
  for (int k = 0; k < 3; ++k) {
    for (const auto& [level, count] : h[k]) {
      out += std::to_string(level) + "," +
             KindName(static_cast<NodeKind>(k)) + "," + std::to_string(count) +
             "\n";
    }
  }
  return out;
}

}  // namespace census
