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

#include "census/systems.h"

#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <memory>

#include "census/enumerate.h"
#include "census/metrics.h"
#include "census/profiles.h"
#include "census/statistics.h"

namespace census {
namespace {

using RingPtr = std::shared_ptr<const MarkRing>;

RingPtr Poly(int degree) {
  return std::make_shared<const MarkRing>(MarkRing::Polynomial(degree));
}

// value -> count over the brute-force term set.
using Counts = std::map<std::uint64_t, std::uint64_t>;

Counts OracleDistribution(
    Enumerator& e, int n, std::optional<int> bound,
    const std::function<void(const Term&, Counts&)>& tally) {
  Counts c;
  for (const Term& t : e.Terms(n, bound)) tally(t, c);
  return c;
}

Counts SeriesDistribution(const JetSeries& s, int n) {
  Counts c;
  const std::vector<mpz_class> d = s.Distribution(n);
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (d[k] != 0) c[k] = d[k].get_ui();
  }
  return c;
}

struct ParameterCase {
  Parameter parameter;
  std::function<void(const Term&, Counts&)> tally;
};

std::vector<ParameterCase> Cases() {
  auto per_term = [](std::function<std::uint64_t(const ParameterReport&)> f) {
    return [f](const Term& t, Counts& c) { ++c[f(Measure(t))]; };
  };
  return {
      {Parameter::kVariables,
       per_term([](const ParameterReport& r) { return r.metrics.variables; })},
      {Parameter::kRedexes,
       per_term([](const ParameterReport& r) { return r.metrics.redexes; })},
      {Parameter::kSuccessors,
       per_term([](const ParameterReport& r) { return r.metrics.successors; })},
      {Parameter::kAbstractions, per_term([](const ParameterReport& r) {
         return r.metrics.abstractions;
       })},
      {Parameter::kHeadAbstractions, per_term([](const ParameterReport& r) {
         return r.metrics.head_abstractions;
       })},
      {Parameter::kLoCost,
       per_term([](const ParameterReport& r) { return r.lo_cost; })},
      {Parameter::kFreeVariables, per_term([](const ParameterReport& r) {
         return r.free_variable_occurrences;
       })},
      {Parameter::kIndexValueProfile,
       [](const Term& t, Counts& c) {
         for (const Node& node : t.nodes()) {
           if (node.kind == NodeKind::kIndex) ++c[node.value];
         }
       }},
  };
}

TEST(OracleTest, PlainDistributions) {
  Enumerator e;
  const int order = 10;
  for (const ParameterCase& pc : Cases()) {
    SCOPED_TRACE(ParameterName(pc.parameter));
    const JetSeries s = SolveMarkedPlain(pc.parameter, order, Poly(order));
    for (int n = 1; n <= order; ++n) {
      EXPECT_EQ(SeriesDistribution(s, n),
                OracleDistribution(e, n, std::nullopt, pc.tally))
          << n;
    }
  }
}

TEST(OracleTest, ClosedDistributions) {
  Enumerator e;
  const int order = 10;
  for (const ParameterCase& pc : Cases()) {
    SCOPED_TRACE(ParameterName(pc.parameter));
    const TruncatedSystem sys =
        SolveTruncatedClosed(order, order, pc.parameter, Poly(order));
    for (int n = 1; n <= order; ++n) {
      EXPECT_EQ(SeriesDistribution(sys.closed(), n),
                OracleDistribution(e, n, 0, pc.tally))
          << n;
    }
  }
}

// Frozen brute-force tables at size 10.
TEST(OracleTest, FrozenSizeTen) {
  auto dist = [](Parameter p, bool closed) {
    if (closed) {
      return SeriesDistribution(
          SolveTruncatedClosed(10, 10, p, Poly(10)).closed(), 10);
    }
    return SeriesDistribution(SolveMarkedPlain(p, 10, Poly(10)), 10);
  };
  EXPECT_EQ(dist(Parameter::kVariables, false),
            (Counts{{1, 10}, {2, 330}, {3, 1584}, {4, 1430}, {5, 196}}));
  EXPECT_EQ(dist(Parameter::kRedexes, true),
            (Counts{{0, 271}, {1, 495}, {2, 129}}));
  EXPECT_EQ(dist(Parameter::kLoCost, false),
            (Counts{{1, 1}, {2, 794}, {3, 546}, {4, 319}, {5, 226},
                    {6, 175}, {7, 153}, {8, 178}, {9, 323}, {10, 835}}));
  EXPECT_EQ(dist(Parameter::kLoCost, true),
            (Counts{{2, 140}, {3, 182}, {4, 127}, {5, 82}, {6, 50},
                    {7, 36}, {8, 32}, {9, 63}, {10, 183}}));
  EXPECT_EQ(dist(Parameter::kFreeVariables, false),
            (Counts{{0, 895}, {1, 997}, {2, 810}, {3, 522}, {4, 256},
                    {5, 70}}));
  EXPECT_EQ(dist(Parameter::kIndexValueProfile, true),
            (Counts{{0, 2237}, {1, 477}, {2, 73}, {3, 9}, {4, 1}}));
  EXPECT_EQ(dist(Parameter::kHeadAbstractions, true),
            (Counts{{0, 152}, {1, 379}, {2, 218}, {3, 90}, {4, 34},
                    {5, 13}, {6, 5}, {7, 2}, {8, 1}, {9, 1}}));
}

TEST(MarkedPlainTest, SizeThree) {
  EXPECT_EQ(SeriesDistribution(
                SolveMarkedPlain(Parameter::kVariables, 3, Poly(3)), 3),
            (Counts{{1, 3}, {2, 1}}));
  EXPECT_EQ(SeriesDistribution(
                SolveMarkedPlain(Parameter::kHeadAbstractions, 3, Poly(3)), 3),
            (Counts{{0, 2}, {1, 1}, {2, 1}}));
}

TEST(MarkedPlainTest, MarkErasure) {
  const Series plain = SolvePlain(25);
  auto jet2 = std::make_shared<const MarkRing>(MarkRing::Jet(1, 2));
  auto jet4 = std::make_shared<const MarkRing>(MarkRing::Jet(4, 2));
  for (Parameter p : {Parameter::kVariables, Parameter::kRedexes,
                      Parameter::kSuccessors, Parameter::kAbstractions,
                      Parameter::kHeadAbstractions, Parameter::kLoCost,
                      Parameter::kFreeVariables}) {
    SCOPED_TRACE(ParameterName(p));
    EXPECT_EQ(SolveMarkedPlain(p, 25, jet2).Erase(), plain);
    EXPECT_EQ(SolveMarkedPlain(p, 25, Poly(25)).Erase(), plain);
  }
  EXPECT_EQ(SolveMarkedPlain(Parameter::kJoint4, 25, jet4).Erase(), plain);
}

TEST(MarkedPlainTest, JointMatchesSingles) {
  auto jet4 = std::make_shared<const MarkRing>(MarkRing::Jet(4, 2));
  auto jet1 = std::make_shared<const MarkRing>(MarkRing::Jet(1, 2));
  const JetSeries joint = SolveMarkedPlain(Parameter::kJoint4, 30, jet4);
  const Parameter singles[] = {Parameter::kVariables, Parameter::kRedexes,
                               Parameter::kSuccessors,
                               Parameter::kAbstractions};
  for (int i = 0; i < 4; ++i) {
    const JetSeries s = SolveMarkedPlain(singles[i], 30, jet1);
    for (int n = 1; n <= 30; ++n) {
      EXPECT_EQ(joint.MomentsAt(n, i).mean, s.MomentsAt(n).mean);
      EXPECT_EQ(joint.MomentsAt(n, i).variance, s.MomentsAt(n).variance);
    }
  }
  // Leaf identity: applications = variables - 1 and size decomposes, so
  // Cov(var, abs) + Cov(var, suc) + 2 Var(var) = 0 at fixed size.
  for (int n = 2; n <= 30; ++n) {
    const mpq_class s = joint.CovarianceAt(n, 0, 3) +
                        joint.CovarianceAt(n, 0, 2) +
                        2 * joint.CovarianceAt(n, 0, 0);
    EXPECT_EQ(s, 0) << n;
  }
}

TEST(MarkedPlainTest, IndexProfileSumsToVariables) {
  auto jet = std::make_shared<const MarkRing>(MarkRing::Jet(1, 1));
  const JetSeries vars = SolveMarkedPlain(Parameter::kVariables, 40, jet);
  const Series profile =
      SolveMarkedPlain(Parameter::kIndexValueProfile, 40, jet).Erase();
  for (int n = 1; n <= 40; ++n) {
    EXPECT_EQ(profile[n], vars.at(n)[jet->LinearSlot(0)]) << n;
  }
}

TEST(CountsTest, Families) {
  Enumerator e;
  const int order = 12;
  const NormalForms nf = SolveNormalForms(order);
  const std::vector<Series> ladder = SolveOpenLadder(order, order);
  for (int n = 1; n <= order; ++n) {
    std::uint64_t normal = 0, neutral = 0;
    for (const Term& t : e.Terms(n, std::nullopt)) {
      normal += IsNormalForm(t);
      neutral += IsNeutral(t);
    }
    EXPECT_EQ(nf.normal[n], normal) << n;
    EXPECT_EQ(nf.neutral[n], neutral) << n;
    EXPECT_EQ(ladder[order][n], e.Terms(n, std::nullopt).size());
    for (int m = 0; m <= 4; ++m) {
      EXPECT_EQ(ladder[m][n], e.Terms(n, m).size()) << n << " " << m;
    }
    for (int h = 0; h <= 2; ++h) {
      std::uint64_t shallow = 0;
      for (const Term& t : e.Terms(n, 0)) {
        bool ok = true;
        for (const Node& node : t.nodes()) {
          ok &= node.kind != NodeKind::kIndex || node.value <= IndexValue(h);
        }
        shallow += ok;
      }
      EXPECT_EQ(SolveHShallow(order, h)[n], shallow) << n << " " << h;
    }
  }
}

TEST(CountsTest, Frozen) {
  const std::vector<Series> l = SolveOpenLadder(12, 12);
  const int closed[] = {0, 1, 1, 3, 6, 17, 41, 116, 313, 895, 2550, 7450};
  const int one_open[] = {1, 1, 3, 5, 15, 34, 98, 258, 743, 2098, 6142, 17988};
  const int shallow0[] = {0, 1, 1, 2, 5, 11, 26, 65, 163, 417, 1086, 2858};
  const Series h0 = SolveHShallow(12, 0);
  for (int n = 1; n <= 12; ++n) {
    EXPECT_EQ(l[0][n], closed[n - 1]);
    EXPECT_EQ(l[1][n], one_open[n - 1]);
    EXPECT_EQ(h0[n], shallow0[n - 1]);
  }
  EXPECT_EQ(SolveHShallow(2, 0)[2], 1);
}

TEST(TruncationTest, HorizonExactness) {
  for (int n = 1; n <= 12; ++n) {
    EXPECT_EQ(SolveOpenLadder(n, n)[0][n], SolveOpenLadder(n, n + 1)[0][n]);
  }
  // A closure at depth M leaves L_0 exact through order 2M.
  const Series exact = SolveOpenLadder(40, 40)[0];
  const Series shallow = SolveOpenLadder(40, 10)[0];
  for (int n = 0; n <= 20; ++n) EXPECT_EQ(shallow[n], exact[n]) << n;
  EXPECT_NE(shallow[21], exact[21]);
}

TEST(TruncationTest, Domination) {
  const int order = 60;
  const std::vector<Series> l = SolveOpenLadder(order, order);
  for (int m = 0; m < order; ++m) {
    for (int n = 0; n <= order; ++n) {
      ASSERT_LE(l[m][n], l[m + 1][n]) << m << " " << n;
      ASSERT_LE(l[m + 1][n], l[order][n]);
    }
  }
}

TEST(TruncationTest, HShallowSaturates) {
  EXPECT_EQ(SolveHShallow(20, 25), SolveOpenLadder(20, 20)[0]);
}

TEST(TruncationTest, MarkErasure) {
  const Series closed = SolveOpenLadder(16, 16)[0];
  auto jet = std::make_shared<const MarkRing>(MarkRing::Jet(4, 2));
  EXPECT_EQ(SolveTruncatedClosed(16, 16, Parameter::kJoint4, jet)
                .closed()
                .Erase(),
            closed);
  for (Parameter p : {Parameter::kVariables, Parameter::kRedexes,
                      Parameter::kHeadAbstractions, Parameter::kLoCost}) {
    EXPECT_EQ(SolveTruncatedClosed(16, 16, p, Poly(16)).closed().Erase(),
              closed)
        << ParameterName(p);
  }
}

TEST(ProfileTest, MatchesOracle) {
  Enumerator e;
  const int order = 9;
  for (bool closed : {false, true}) {
    for (HeightKind h : {HeightKind::kUnary, HeightKind::kNatural}) {
      for (int kind = 0; kind < 3; ++kind) {
        for (int k = 0; k <= 3; ++k) {
          const Series s = LevelProfileSeries(static_cast<NodeKind>(kind), h,
                                               k, order, closed);
          for (int n = 1; n <= order; ++n) {
            std::uint64_t total = 0;
            for (const Term& t :
                 e.Terms(n, closed ? std::optional<int>(0) : std::nullopt)) {
              const Histogram& hist = HeightProfile(t, h)[kind];
              if (auto it = hist.find(k); it != hist.end()) total += it->second;
            }
            ASSERT_EQ(s[n], total) << closed << " " << int(h) << " " << kind
                                   << " " << k << " " << n;
          }
        }
      }
    }
  }
}

TEST(ProfileTest, Examples) {
  EXPECT_EQ(LevelProfileSeries(NodeKind::kIndex, HeightKind::kUnary, 0, 4,
                               false)[2],
            1);
  for (int kind = 0; kind < 3; ++kind) {
    const Series plain = LevelProfileSeries(static_cast<NodeKind>(kind),
                                            HeightKind::kNatural, 2, 20, false);
    const Series closed = LevelProfileSeries(static_cast<NodeKind>(kind),
                                             HeightKind::kNatural, 2, 20, true);
    for (int n = 0; n <= 20; ++n) EXPECT_LE(closed[n], plain[n]);
  }
}

}  // namespace
}  // namespace census
