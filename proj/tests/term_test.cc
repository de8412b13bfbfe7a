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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <string>

#include "census/enumerate.h"
#include "census/metrics.h"
#include "census/term.h"
#include "census/term_io.h"

namespace census {
namespace {

Term I(IndexValue v) { return Term::Index(v); }
Term L(const Term& b) { return Term::Abs(b); }
Term A(const Term& l, const Term& r) { return Term::App(l, r); }

TEST(SizeTest, Examples) {
  EXPECT_EQ(I(0).Size(), 1u);
  EXPECT_EQ(L(L(L(A(A(I(2), I(1)), I(0))))).Size(), 11u);
  EXPECT_EQ(A(L(I(0)), I(0)).Size(), 4u);
  EXPECT_EQ(Parse("(\\0) 0").Size(), 4u);
  const std::vector<Term> four = Enumerate(4, std::nullopt);
  EXPECT_NE(std::find(four.begin(), four.end(), A(L(I(0)), I(0))), four.end());
}

TEST(OpennessTest, Examples) {
  EXPECT_EQ(Openness(L(I(0))), 0u);
  EXPECT_EQ(Openness(L(L(A(I(2), I(1))))), 1u);
  EXPECT_EQ(Openness(I(4)), 5u);
}

TEST(OpennessTest, Generalized) {
  EXPECT_EQ(GeneralizedOpenness(L(L(A(I(2), I(1))))), 1);
  EXPECT_EQ(GeneralizedOpenness(L(L(I(0)))), -1);
  EXPECT_EQ(GeneralizedOpenness(L(I(0))), 0);
  EXPECT_EQ(GeneralizedOpenness(L(L(L(I(1))))), -1);
  EXPECT_EQ(GeneralizedOpenness(L(L(L(A(I(0), L(I(0))))))), -2);
}

TEST(HeadAbstractionsTest, Examples) {
  EXPECT_EQ(HeadAbstractions(I(0)), 0u);
  EXPECT_EQ(HeadAbstractions(Parse("\\\\\\2 0 (1 0)")), 3u);
  EXPECT_EQ(HeadAbstractions(A(L(I(0)), L(I(0)))), 0u);
}

TEST(ParseTest, Examples) {
  EXPECT_EQ(Parse("\\\\\\ 2 0 (1 0)"),
            L(L(L(A(A(I(2), I(0)), A(I(1), I(0)))))));
  EXPECT_EQ(Parse("0"), I(0));
  const Term t = Parse("((0 0) 0)");
  EXPECT_EQ(t, A(A(I(0), I(0)), I(0)));
  EXPECT_EQ(Print(t), "0 0 0");
}

TEST(ParseTest, Lambda) {
  EXPECT_EQ(Parse("λλ0"), L(L(I(0))));
  EXPECT_EQ(Parse("  0   (\\0)\n"), A(I(0), L(I(0))));
  EXPECT_EQ(Parse("0 \\0 1"), A(I(0), L(A(I(0), I(1)))));
  EXPECT_EQ(Parse("4294967295"), I(4294967295u));
}

TEST(ParseTest, Errors) {
  struct Case {
    const char* text;
    std::size_t offset;
  };
  const Case cases[] = {
      {"", 0},        {"(", 0},         {"0)", 1},          {"\\", 1},
      {"()", 1},      {"0 x", 2},       {"-1", 0},          {"4294967296", 0},
      {"(\\)", 2},    {"0 (0", 2},
  };
  for (const Case& c : cases) {
    SCOPED_TRACE(c.text);
    try {
      Parse(c.text);
      ADD_FAILURE() << "parsed";
    } catch (const ParseError& e) {
      EXPECT_EQ(e.offset(), c.offset) << e.what();
    }
  }
}

TEST(PrintTest, Parentheses) {
  EXPECT_EQ(Print(L(L(L(A(A(I(2), I(0)), A(I(1), I(0))))))), "\\\\\\2 0 (1 0)");
  EXPECT_EQ(Print(A(L(I(0)), I(0))), "(\\0) 0");
  EXPECT_EQ(Print(A(I(0), L(I(0)))), "0 \\0");
  EXPECT_EQ(Print(A(A(I(0), L(I(0))), I(1))), "0 (\\0) 1");
  EXPECT_EQ(Print(A(I(0), A(I(1), I(2)))), "0 (1 2)");
  EXPECT_EQ(Print(L(A(I(0), L(I(0))))), "\\0 \\0");
}

TEST(RoundtripTest, AllTermsUpToTwelve) {
  Enumerator e;
  for (int n = 1; n <= 12; ++n) {
    for (const Term& t : e.Terms(n, std::nullopt)) {
      const std::string text = Print(t);
      ASSERT_EQ(Parse(text), t) << text;
      ASSERT_EQ(FromJson(nlohmann::json::parse(ToJson(t))), t) << text;
    }
  }
}

TEST(JsonTest, Encoding) {
  EXPECT_EQ(ToJson(A(L(I(0)), I(3))),
            R"({"app":[{"abs":{"idx":0}},{"idx":3}]})");
  EXPECT_THROW(FromJson(nlohmann::json::parse(R"({"idx":-1})")), ParseError);
  EXPECT_THROW(FromJson(nlohmann::json::parse(R"({"app":[{"idx":0}]})")),
               ParseError);
}

TEST(EnumerateTest, SmallCases) {
  const std::vector<Term> one = Enumerate(1, std::nullopt);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], I(0));

  const std::vector<Term> three = Enumerate(3, std::nullopt);
  const std::vector<Term> expected = {I(2), L(I(1)), L(L(I(0))),
                                      A(I(0), I(0))};
  EXPECT_EQ(three, expected);

  const std::vector<Term> closed = Enumerate(2, 0);
  ASSERT_EQ(closed.size(), 1u);
  EXPECT_EQ(closed[0], L(I(0)));
}

TEST(EnumerateTest, Counts) {
  const std::size_t plain[] = {1,   2,    4,    9,     22,    57,
                               154, 429, 1223, 3550, 10455, 31160};
  Enumerator e;
  for (int n = 1; n <= 12; ++n) {
    EXPECT_EQ(e.Terms(n, std::nullopt).size(), plain[n - 1]) << n;
  }
}

TEST(EnumerateTest, UniqueAndMonotone) {
  Enumerator e;
  for (int n = 1; n <= 10; ++n) {
    std::set<std::string> all;
    for (const Term& t : e.Terms(n, std::nullopt)) {
      EXPECT_EQ(t.Size(), static_cast<std::uint64_t>(n));
      EXPECT_TRUE(all.insert(Print(t)).second);
    }
    for (int m = 0; m <= n; ++m) {
      std::set<std::string> inner;
      for (const Term& t : e.Terms(n, m)) {
        EXPECT_LE(Openness(t), static_cast<std::uint64_t>(m));
        inner.insert(Print(t));
      }
      for (const Term& t : e.Terms(n, m + 1)) inner.erase(Print(t));
      EXPECT_TRUE(inner.empty()) << n << " " << m;
    }
  }
}

TEST(MetricsTest, Identities) {
  Enumerator e;
  for (int n = 1; n <= 10; ++n) {
    for (const Term& t : e.Terms(n, std::nullopt)) {
      const TermMetrics m = ComputeMetrics(t);
      ASSERT_EQ(m.size, m.abstractions + m.applications + m.successors +
                            m.variables);
      ASSERT_EQ(m.applications + 1, m.variables);
      ASSERT_LE(m.generalized_openness, static_cast<std::int64_t>(m.openness));
    }
  }
}

Term RightComb(int apps) {
  TermBuilder b;
  for (int i = 0; i < apps; ++i) {
    b.OpenApp();
    b.AddIndex(static_cast<IndexValue>(i % 3));
  }
  b.AddIndex(0);
  return b.Finish();
}

Term LambdaChain(int depth) {
  TermBuilder b;
  for (int i = 0; i < depth; ++i) b.OpenAbs();
  b.AddIndex(static_cast<IndexValue>(depth - 1));
  return b.Finish();
}

TEST(DepthSafetyTest, DeepTerms) {
  const Term comb = RightComb(50000);
  EXPECT_EQ(comb.node_count(), 100001u);
  const TermMetrics m = ComputeMetrics(comb);
  EXPECT_EQ(m.variables, 50001u);
  EXPECT_EQ(m.openness, 3u);
  const std::string text = Print(comb);
  EXPECT_EQ(Parse(text), comb);
  EXPECT_EQ(FromJson(nlohmann::json::parse(ToJson(comb))), comb);

  const Term chain = LambdaChain(100000);
  EXPECT_EQ(Openness(chain), 0u);
  EXPECT_EQ(GeneralizedOpenness(chain), 0);
  EXPECT_EQ(Parse(Print(chain)), chain);
}

TEST(BuilderTest, Misuse) {
  TermBuilder b;
  b.OpenApp();
  b.AddIndex(0);
  EXPECT_FALSE(b.complete());
  EXPECT_THROW(b.Finish(), std::logic_error);
  b.AddIndex(1);
  EXPECT_TRUE(b.complete());
  EXPECT_THROW(b.AddIndex(2), std::logic_error);
  EXPECT_EQ(b.Finish(), A(I(0), I(1)));
}

}  // namespace
}  // namespace census
