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

#include <gtest/gtest.h>

#include "census/enumerate.h"
#include "census/metrics.h"
#include "census/term_io.h"

namespace census {
namespace {

TEST(LoCostTest, Examples) {
  EXPECT_EQ(LoCost(Parse("0")), 1u);
  EXPECT_EQ(LoCost(Parse("(\\0) 0")), 2u);
  EXPECT_EQ(LoCost(Parse("\\\\0")), 3u);
  // Neutral left branch: all of `1 2` (6 atoms) plus the application.
  EXPECT_EQ(LoCost(Parse("1 2 ((\\0) 0)")), 1u + 6u + 2u);
  // Left branch with a redex: descend into it.
  EXPECT_EQ(LoCost(Parse("((\\0) 0) 3")), 3u);
}

TEST(LoCostTest, Bounds) {
  Enumerator e;
  for (int n = 1; n <= 12; ++n) {
    for (const Term& t : e.Terms(n, std::nullopt)) {
      const std::uint64_t c = LoCost(t);
      ASSERT_LE(c, t.Size());
      const bool root_redex = t.kind(0) == NodeKind::kApp &&
                              t.kind(1) == NodeKind::kAbs;
      if (t.kind(0) == NodeKind::kApp) {
        ASSERT_EQ(c == 2, root_redex) << Print(t);
      }
      if (t.kind(0) == NodeKind::kAbs) ASSERT_GE(c, 2u);
    }
  }
}

TEST(NormalFormTest, Examples) {
  EXPECT_TRUE(IsNormalForm(Parse("\\0")));
  EXPECT_FALSE(IsNeutral(Parse("\\0")));
  EXPECT_FALSE(IsNormalForm(Parse("(\\0) 0")));
  EXPECT_TRUE(IsNormalForm(Parse("0 \\0")));
  EXPECT_TRUE(IsNeutral(Parse("0 \\0")));
  EXPECT_FALSE(IsNormalForm(Parse("\\0 ((\\0) 1)")));
}

TEST(FreeVariablesTest, Examples) {
  EXPECT_EQ(FreeVariableOccurrences(Parse("\\\\2 1")), 1u);
  EXPECT_EQ(FreeVariableOccurrences(Parse("\\0")), 0u);
  EXPECT_EQ(FreeVariableOccurrences(Parse("1 0")), 2u);
}

TEST(OpenSubtermTest, Examples) {
  EXPECT_EQ(OpenSubtermFraction(Parse("\\0")), (Fraction{1, 2}));
  EXPECT_EQ(OpenSubtermFraction(Parse("0")), (Fraction{1, 1}));
  EXPECT_EQ(OpenSubtermFraction(Parse("\\\\0")), (Fraction{1, 3}));
}

TEST(BindingTest, Examples) {
  struct Case {
    const char* text;
    Fraction fraction;
    std::uint64_t max_bound;
  };
  const Case cases[] = {
      {"\\0", {1, 1}, 1},
      {"\\\\0", {1, 2}, 1},
      {"\\0 0", {1, 1}, 2},
      {"\\\\\\2 0 (1 0)", {3, 3}, 2},
      {"\\(\\1) 0", {1, 2}, 2},
  };
  for (const Case& c : cases) {
    SCOPED_TRACE(c.text);
    const BindingStats s = ComputeBindingStats(Parse(c.text));
    ASSERT_TRUE(s.binding_fraction.has_value());
    EXPECT_EQ(*s.binding_fraction, c.fraction);
    EXPECT_EQ(s.max_bound, c.max_bound);
  }
  const BindingStats none = ComputeBindingStats(Parse("0 1"));
  EXPECT_FALSE(none.binding_fraction.has_value());
  EXPECT_EQ(none.max_bound, 0u);
}

TEST(HeightTest, Examples) {
  const KindHistograms u = HeightProfile(Parse("\\0"), HeightKind::kUnary);
  const KindHistograms n = HeightProfile(Parse("\\0"), HeightKind::kNatural);
  EXPECT_EQ(u[0], (Histogram{{1, 1}}));
  EXPECT_EQ(n[0], (Histogram{{1, 1}}));
  EXPECT_EQ(u[1], (Histogram{{0, 1}}));
  EXPECT_EQ(n[1], (Histogram{{0, 1}}));

  EXPECT_EQ(HeightProfile(Parse("0 0"), HeightKind::kUnary)[0],
            (Histogram{{0, 2}}));
  EXPECT_EQ(HeightProfile(Parse("0 0"), HeightKind::kNatural)[0],
            (Histogram{{1, 2}}));

  const Term fig = Parse("\\\\\\2 0 (1 0)");
  EXPECT_EQ(HeightProfile(fig, HeightKind::kUnary)[0], (Histogram{{3, 4}}));
  EXPECT_EQ(HeightProfile(fig, HeightKind::kNatural)[0], (Histogram{{5, 4}}));
}

TEST(MeasureTest, Examples) {
  const ParameterReport id = Measure(Parse("\\0"));
  EXPECT_EQ(id.metrics.size, 2u);
  EXPECT_EQ(id.metrics.redexes, 0u);
  EXPECT_EQ(id.metrics.head_abstractions, 1u);
  EXPECT_EQ(id.lo_cost, 2u);

  const ParameterReport zero = Measure(Parse("0"));
  EXPECT_EQ(zero.metrics.size, 1u);
  EXPECT_EQ(zero.metrics.openness, 1u);
  EXPECT_EQ(zero.lo_cost, 1u);

  const ParameterReport redex = Measure(Parse("(\\0) 0"));
  EXPECT_EQ(redex.metrics.redexes, 1u);
  EXPECT_EQ(redex.lo_cost, 2u);
  EXPECT_EQ(redex.metrics.openness, 1u);
}

std::uint64_t Total(const Histogram& h) {
  std::uint64_t s = 0;
  for (const auto& [k, v] : h) s += v;
  return s;
}

TEST(MeasureTest, ReportInvariants) {
  Enumerator e;
  for (int n = 1; n <= 10; ++n) {
    for (const Term& t : e.Terms(n, std::nullopt)) {
      const ParameterReport r = Measure(t);
      const TermMetrics& m = r.metrics;
      ASSERT_EQ(Total(r.index_value_histogram), m.variables);
      ASSERT_EQ(r.free_variable_occurrences == 0, m.openness == 0);
      for (const KindHistograms* h :
           {&r.unary_height_histograms, &r.natural_height_histograms}) {
        ASSERT_EQ(Total((*h)[0]), m.variables);
        ASSERT_EQ(Total((*h)[1]), m.abstractions);
        ASSERT_EQ(Total((*h)[2]), m.applications);
      }
      ASSERT_EQ(r.binding_abstraction_fraction.has_value(),
                m.abstractions > 0);
    }
  }
}

TEST(MeasureTest, Json) {
  const nlohmann::json j = ReportToJson(Measure(Parse("0 1")));
  EXPECT_EQ(j["size"], 4);
  EXPECT_EQ(j["binding_abstraction_fraction"], "undefined");
  EXPECT_EQ(j["index_value_histogram"], nlohmann::json::parse("[[0,1],[1,1]]"));
  EXPECT_EQ(HeightHistogramCsv(Measure(Parse("\\0")), HeightKind::kUnary),
            "level,kind,count\n1,variable,1\n0,abstraction,1\n");
}

}  // namespace
}  // namespace census
