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

#include <stdexcept>

#include "census/systems.h"
#include "solver_util.h"

namespace census {

namespace internal {
JetSeries SolvePlainLoCost(int order, std::shared_ptr<const MarkRing> ring);
}  // namespace internal

using internal::AddProduct;
using internal::AddScaledProduct;
using internal::AddSquare;
using internal::Scratch;

std::vector<Series> SolveOpenLadder(int order, int depth) {
  if (depth < 0) throw std::invalid_argument("negative depth");
  std::vector<Series> levels(depth + 1, Series(order));
  levels[depth] = SolvePlain(order);
  for (int m = depth - 1; m >= 0; --m) {
    Series& l = levels[m];
    const Series& up = levels[m + 1];
    for (int n = 1; n <= order; ++n) {
      mpz_class c = up[n - 1] + (n <= m ? 1 : 0);
      AddSquareCoefficient(c, l, n - 1);
      l[n] = c;
    }
  }
  return levels;
}

OpenNormalForms SolveOpenNormalForms(int order, int depth) {
  OpenNormalForms f;
  f.normal.assign(depth + 1, Series(order));
  f.neutral.assign(depth + 1, Series(order));
  NormalForms plain = SolveNormalForms(order);
  f.normal[depth] = plain.normal;
  f.neutral[depth] = plain.neutral;
  for (int m = depth - 1; m >= 0; --m) {
    Series& nf = f.normal[m];
    Series& ne = f.neutral[m];
    for (int n = 1; n <= order; ++n) {
      mpz_class c = n <= m ? 1 : 0;
      AddProductCoefficient(c, ne, nf, n - 1);
      ne[n] = c;
      nf[n] = f.normal[m + 1][n - 1] + c;
    }
  }
  return f;
}

Series SolveHShallow(int order, int h) {
  if (h < 0) throw std::invalid_argument("negative shallowness bound");
  // Level h+1 and above: every index 0..h may occur.
  Series upper(order);
  for (int n = 1; n <= order; ++n) {
    mpz_class c = upper[n - 1] + (n <= h + 1 ? 1 : 0);
    AddSquareCoefficient(c, upper, n - 1);
    upper[n] = c;
  }
  for (int m = h; m >= 0; --m) {
    Series l(order);
    for (int n = 1; n <= order; ++n) {
      mpz_class c = upper[n - 1] + (n <= m ? 1 : 0);
      AddSquareCoefficient(c, l, n - 1);
      l[n] = c;
    }
    upper = std::move(l);
  }
  return upper;
}

namespace {

using RingPtr = std::shared_ptr<const MarkRing>;

// Per-level step: fills `level` given the level above.
template <typename Step>
TruncatedSystem Ladder(int order, int depth, Parameter p, RingPtr ring,
                       JetSeries closure, Step step) {
  TruncatedSystem sys;
  sys.depth = depth;
  sys.parameter = p;
  sys.levels.assign(depth + 1, JetSeries(ring, order));
  sys.levels[depth] = std::move(closure);
  for (int m = depth - 1; m >= 0; --m) {
    step(m, sys.levels[m], sys.levels[m + 1]);
  }
  return sys;
}

}  // namespace

TruncatedSystem SolveTruncatedClosed(int order, int depth, Parameter p,
                                     std::shared_ptr<const MarkRing> ring) {
  if (depth < 1) throw std::invalid_argument("depth must be positive");
  const MarkRing& r = *ring;
  Scratch scratch(r), tmp(r), tmp2(r);

  switch (p) {
    case Parameter::kNone:
    case Parameter::kFreeVariables: {
      // Closed terms have no free occurrences: every coefficient sits at u^0.
      const std::vector<Series> ladder = SolveOpenLadder(order, depth);
      TruncatedSystem sys;
      sys.depth = depth;
      sys.parameter = p;
      for (const Series& s : ladder) sys.levels.push_back(JetSeries::Lift(ring, s));
      return sys;
    }
    case Parameter::kVariables:
      // L_m = zL_{m+1} + zL_m^2 + u z(1-z^m)/(1-z)
      return Ladder(order, depth, p, ring, SolveMarkedPlain(p, order, ring),
                    [&](int m, JetSeries& l, const JetSeries& up) {
                      for (int n = 1; n <= order; ++n) {
                        mpz_class* c = l.at(n);
                        internal::Assign(r, c, up.at(n - 1));
                        AddSquare(r, c, l, n - 1, scratch);
                        if (n <= m) r.AddMark(c, 0, 1, 1);
                      }
                    });
    case Parameter::kRedexes: {
      // L_m = zL_{m+1} + N_m
      // N_m = z(1-z^m)/(1-z) + u z^2 L_{m+1} L_m + z N_m L_m
      return Ladder(order, depth, p, ring, SolveMarkedPlain(p, order, ring),
                    [&](int m, JetSeries& l, const JetSeries& up) {
                      JetSeries nonabs(ring, order);
                      for (int n = 1; n <= order; ++n) {
                        mpz_class* a = nonabs.at(n);
                        if (n <= m) a[0] += 1;
                        if (n >= 2) {
                          mpz_class* t = tmp.Zeroed();
                          AddProduct(r, t, up, l, n - 2);
                          r.MarkMulAdd(a, t, 0, 1, 1);
                        }
                        AddProduct(r, a, nonabs, l, n - 1);
                        mpz_class* c = l.at(n);
                        internal::Assign(r, c, up.at(n - 1));
                        internal::Add(r, c, a);
                      }
                    });
    }
    case Parameter::kSuccessors:
    case Parameter::kAbstractions:
    case Parameter::kJoint4: {
      JointMarks marks;
      if (p == Parameter::kSuccessors) marks.successors = 0;
      if (p == Parameter::kAbstractions) marks.abstractions = 0;
      if (p == Parameter::kJoint4) marks = {0, 1, 2, 3};
      // L_m = u_abs zL_{m+1} + A_m
      // A_m = u_var z(1-(u_suc z)^m)/(1-u_suc z)
      //       + u_red u_abs z^2 L_m L_{m+1} + z A_m L_m
      return Ladder(
          order, depth, p, ring, SolveJoint(order, ring, marks),
          [&](int m, JetSeries& l, const JetSeries& up) {
            JetSeries a(ring, order);
            for (int n = 1; n <= order; ++n) {
              mpz_class* an = a.at(n);
              if (n <= m) {
                mpz_class* v = tmp.Zeroed();
                r.AddMark(v, marks.variables, 1, 1);
                r.MarkMulAdd(an, v, marks.successors, n - 1, 1);
              }
              if (n >= 2) {
                mpz_class* t = tmp.Zeroed();
                AddProduct(r, t, l, up, n - 2);
                mpz_class* t2 = tmp2.Zeroed();
                r.MarkMulAdd(t2, t, marks.redexes, 1, 1);
                r.MarkMulAdd(an, t2, marks.abstractions, 1, 1);
              }
              AddProduct(r, an, a, l, n - 1);
              mpz_class* c = l.at(n);
              r.MarkMulAdd(c, up.at(n - 1), marks.abstractions, 1, 1);
              internal::Add(r, c, an);
            }
          });
    }
    case Parameter::kHeadAbstractions: {
      // L_m(z,u) = zu L_{m+1}(z,u) + z L_m(z,1)^2 + z(1-z^m)/(1-z)
      const std::vector<Series> plain = SolveOpenLadder(order, depth);
      return Ladder(order, depth, p, ring, SolveMarkedPlain(p, order, ring),
                    [&](int m, JetSeries& l, const JetSeries& up) {
                      for (int n = 1; n <= order; ++n) {
                        mpz_class* c = l.at(n);
                        r.MarkMulAdd(c, up.at(n - 1), 0, 1, 1);
                        mpz_class tail = n <= m ? 1 : 0;
                        AddSquareCoefficient(tail, plain[m], n - 1);
                        c[0] += tail;
                      }
                    });
    }
    case Parameter::kIndexValueProfile: {
      // E_m = zE_{m+1} + 2zL_m E_m + z(1-(wz)^m)/(1-wz)
      const std::vector<Series> plain = SolveOpenLadder(order, depth);
      return Ladder(order, depth, p, ring, SolveMarkedPlain(p, order, ring),
                    [&](int m, JetSeries& e, const JetSeries& up) {
                      const Series twice = plain[m] * mpz_class(2);
                      for (int n = 1; n <= order; ++n) {
                        mpz_class* c = e.at(n);
                        internal::Assign(r, c, up.at(n - 1));
                        AddScaledProduct(r, c, twice, e, n - 1);
                        if (n <= m) r.AddMark(c, 0, n - 1, 1);
                      }
                    });
    }
    case Parameter::kLoCost: {
      // L_m = zu L_{m+1} + A_m
      // A_m = zu(1-z^m)/(1-z) + z^2u^2 L1_m L1_{m+1} + zu M_m(zu) L_m
      //       + zu (A_m - M~_m) L1_m
      const std::vector<Series> plain = SolveOpenLadder(order, depth);
      const OpenNormalForms nf = SolveOpenNormalForms(order, depth);
      internal::LoNormalForms lo = internal::SolveLoNormalForms(
          order, ring, nf.neutral[depth], -1, nullptr);
      return Ladder(
          order, depth, p, ring, internal::SolvePlainLoCost(order, ring),
          [&](int m, JetSeries& l, const JetSeries& up) {
            lo = internal::SolveLoNormalForms(order, ring, nf.neutral[m], m,
                                              &lo.normal);
            l = internal::SolveLoLevel(order, ring, m,
                                       plain[m] * plain[m + 1], nf.neutral[m],
                                       plain[m], lo.neutral, &up);
          });
    }
  }
  throw std::invalid_argument("unknown parameter");
}

}  // namespace census
