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

#include <stdexcept>

#include "solver_util.h"

namespace census {

using internal::AddProduct;
using internal::AddScaledProduct;
using internal::AddSquare;
using internal::Scratch;

Series SolvePlain(int order) {
  Series l(order);
  for (int n = 1; n <= order; ++n) {
    mpz_class c = l[n - 1] + 1;
    AddSquareCoefficient(c, l, n - 1);
    l[n] = c;
  }
  return l;
}

Series SolvePlainFixedPoint(int order) {
  const Series z = Series::Monomial(order, 1);
  const Series indices = Series::Run(order, 1, order);
  Series l(order);
  // Each pass fixes at least one more coefficient.
  for (int pass = 0; pass <= order; ++pass) {
    l = z * l + z * (l * l) + indices;
  }
  return l;
}

Series SolvePlainClosedForm(int order) {
  const int k = order + 1;
  const QSeries one = QSeries::Monomial(k, 0);
  const QSeries z = QSeries::Monomial(k, 1);
  const QSeries one_minus_z = one - z;
  const QSeries radicand =
      one_minus_z * one_minus_z -
      (z * z * mpq_class(4)) * one_minus_z.Reciprocal();
  const QSeries numerator = one_minus_z - Sqrt(radicand);
  return ToInteger((numerator * mpq_class(1, 2)).Shift(-1)).Truncate(order);
}

NormalForms SolveNormalForms(int order) {
  NormalForms f{Series(order), Series(order)};
  for (int n = 1; n <= order; ++n) {
    mpz_class m = 1;
    AddProductCoefficient(m, f.neutral, f.normal, n - 1);
    f.neutral[n] = m;
    f.normal[n] = f.normal[n - 1] + m;
  }
  return f;
}

Series NeutralClosedForm(int order) {
  const int k = order + 1;
  const QSeries one = QSeries::Monomial(k, 0);
  const QSeries z = QSeries::Monomial(k, 1);
  const QSeries radicand = (one + z) * (one - z * mpq_class(3));
  const QSeries numerator = one - z - Sqrt(radicand);
  return ToInteger((numerator * mpq_class(1, 2)).Shift(-1)).Truncate(order);
}

Parameter ParseParameter(std::string_view name) {
  static const std::pair<const char*, Parameter> kNames[] = {
      {"none", Parameter::kNone},
      {"variables", Parameter::kVariables},
      {"redexes", Parameter::kRedexes},
      {"successors", Parameter::kSuccessors},
      {"abstractions", Parameter::kAbstractions},
      {"joint4", Parameter::kJoint4},
      {"head_abs", Parameter::kHeadAbstractions},
      {"lo_cost", Parameter::kLoCost},
      {"index_value", Parameter::kIndexValueProfile},
      {"free_variables", Parameter::kFreeVariables},
  };
  for (const auto& [n, p] : kNames) {
    if (name == n) return p;
  }
  throw std::invalid_argument("unknown parameter '" + std::string(name) + "'");
}

std::string ParameterName(Parameter p) {
  switch (p) {
    case Parameter::kNone: return "none";
    case Parameter::kVariables: return "variables";
    case Parameter::kRedexes: return "redexes";
    case Parameter::kSuccessors: return "successors";
    case Parameter::kAbstractions: return "abstractions";
    case Parameter::kJoint4: return "joint4";
    case Parameter::kHeadAbstractions: return "head_abs";
    case Parameter::kLoCost: return "lo_cost";
    case Parameter::kIndexValueProfile: return "index_value";
    case Parameter::kFreeVariables: return "free_variables";
  }
  return "";
}

namespace {

using RingPtr = std::shared_ptr<const MarkRing>;

// L = zL + zL^2 + u z/(1-z)
JetSeries SolveVariables(int order, RingPtr ring) {
  const MarkRing& r = *ring;
  JetSeries l(ring, order);
  Scratch scratch(r);
  for (int n = 1; n <= order; ++n) {
    mpz_class* c = l.at(n);
    internal::Assign(r, c, l.at(n - 1));
    AddSquare(r, c, l, n - 1, scratch);
    r.AddMark(c, 0, 1, 1);
  }
  return l;
}

// L = zL + N,  N = z/(1-z) + u z^2 L^2 + zNL
JetSeries SolveRedexes(int order, RingPtr ring) {
  const MarkRing& r = *ring;
  JetSeries l(ring, order), nonabs(ring, order);
  Scratch scratch(r), square(r);
  for (int n = 1; n <= order; ++n) {
    mpz_class* a = nonabs.at(n);
    a[0] += 1;
    if (n >= 2) {
      mpz_class* sq = square.Zeroed();
      AddSquare(r, sq, l, n - 2, scratch);
      r.MarkMulAdd(a, sq, 0, 1, 1);
    }
    AddProduct(r, a, nonabs, l, n - 1);
    mpz_class* c = l.at(n);
    internal::Assign(r, c, l.at(n - 1));
    internal::Add(r, c, a);
  }
  return l;
}

// L = zL + zL(z,1)^2 + z/(1-z) with every leading λ marked:
// L(z,u) = zu L(z,u) + z L(z,1)^2 + z/(1-z).
JetSeries SolveHeadAbstractions(int order, RingPtr ring) {
  const MarkRing& r = *ring;
  const Series plain = SolvePlain(order);
  JetSeries l(ring, order);
  for (int n = 1; n <= order; ++n) {
    mpz_class* c = l.at(n);
    r.MarkMulAdd(c, l.at(n - 1), 0, 1, 1);
    mpz_class tail = 1;
    AddSquareCoefficient(tail, plain, n - 1);
    c[0] += tail;
  }
  return l;
}

// S = zS + 2zSL + z/(1-zw): one index occurrence marked by its value.
JetSeries SolveIndexProfile(int order, RingPtr ring) {
  const MarkRing& r = *ring;
  const Series plain = SolvePlain(order);
  const Series twice = plain * mpz_class(2);
  JetSeries s(ring, order);
  for (int n = 1; n <= order; ++n) {
    mpz_class* c = s.at(n);
    internal::Assign(r, c, s.at(n - 1));
    AddScaledProduct(r, c, twice, s, n - 1);
    r.AddMark(c, 0, n - 1, 1);
  }
  return s;
}

// Free indices marked, through the m-open ladder
// L_m = zL_{m+1} + zL_m^2 + z(1-z^m)/(1-z) + u z^{m+1}/(1-z).
// Beyond the order every free index is too large to matter, so the ladder is
// closed by the unmarked plain series.
JetSeries SolveFreeVariables(int order, RingPtr ring) {
  const MarkRing& r = *ring;
  const int depth = order + 1;
  JetSeries upper = JetSeries::Lift(ring, SolvePlain(order));
  Scratch scratch(r);
  for (int m = depth - 1; m >= 0; --m) {
    JetSeries level(ring, order);
    for (int n = 1; n <= order; ++n) {
      mpz_class* c = level.at(n);
      internal::Assign(r, c, upper.at(n - 1));
      AddSquare(r, c, level, n - 1, scratch);
      if (n <= m) {
        c[0] += 1;
      } else {
        r.AddMark(c, 0, 1, 1);
      }
    }
    upper = std::move(level);
  }
  return upper;
}

}  // namespace

// L = u_abs zL + A,  A = u_var z/(1 - u_suc z) + u_red u_abs z^2 L^2 + zAL
JetSeries SolveJoint(int order, std::shared_ptr<const MarkRing> ring,
                     const JointMarks& marks) {
  const MarkRing& r = *ring;
  JetSeries l(ring, order), a(ring, order);
  Scratch scratch(r), square(r), tmp(r);
  for (int n = 1; n <= order; ++n) {
    mpz_class* an = a.at(n);
    // u_var u_suc^{n-1}
    mpz_class* v = tmp.Zeroed();
    r.AddMark(v, marks.variables, 1, 1);
    r.MarkMulAdd(an, v, marks.successors, n - 1, 1);
    if (n >= 2) {
      mpz_class* sq = square.Zeroed();
      AddSquare(r, sq, l, n - 2, scratch);
      mpz_class* t = tmp.Zeroed();
      r.MarkMulAdd(t, sq, marks.redexes, 1, 1);
      r.MarkMulAdd(an, t, marks.abstractions, 1, 1);
    }
    AddProduct(r, an, a, l, n - 1);
    mpz_class* c = l.at(n);
    r.MarkMulAdd(c, l.at(n - 1), marks.abstractions, 1, 1);
    internal::Add(r, c, an);
  }
  return l;
}

namespace internal {

// Plain leftmost-outermost search cost:
// L = zuL + A
// A = zu/(1-z) + z^2u^2 L1^2 + zu M(zu) L + zu (A - M(zu)) L1
// where L1 is the unmarked series and M counts neutral terms.
LoNormalForms SolveLoNormalForms(int order, std::shared_ptr<const MarkRing> ring,
                                 const Series& neutral, int indices,
                                 const JetSeries* normal_up) {
  const MarkRing& r = *ring;
  LoNormalForms f{JetSeries(ring, order), JetSeries(ring, order)};
  for (int n = 1; n <= order; ++n) {
    mpz_class* mt = f.neutral.at(n);
    if (indices < 0 || n <= indices) r.AddMark(mt, 0, 1, 1);
    for (int k = 1; k <= n - 1; ++k) {
      if (sgn(neutral[k]) == 0) continue;
      r.MarkMulAdd(mt, f.normal.at(n - 1 - k), 0, k + 1, neutral[k]);
    }
    mpz_class* nt = f.normal.at(n);
    const JetSeries& up = normal_up != nullptr ? *normal_up : f.normal;
    r.MarkMulAdd(nt, up.at(n - 1), 0, 1, 1);
    Add(r, nt, mt);
  }
  return f;
}

JetSeries SolveLoLevel(int order, std::shared_ptr<const MarkRing> ring,
                       int indices, const Series& redex_pairs,
                       const Series& neutral, const Series& l1,
                       const JetSeries& lo_neutral, const JetSeries* up) {
  const MarkRing& r = *ring;
  Scratch scratch(r);
  JetSeries l(ring, order), rest(ring, order);
  for (int n = 1; n <= order; ++n) {
    mpz_class* an = scratch.Zeroed();
    if (indices < 0 || n <= indices) r.AddMark(an, 0, 1, 1);
    if (n >= 2) r.AddMark(an, 0, 2, redex_pairs[n - 2]);
    for (int k = 1; k <= n - 1; ++k) {
      if (sgn(neutral[k]) == 0) continue;
      r.MarkMulAdd(an, l.at(n - 1 - k), 0, k + 1, neutral[k]);
    }
    mpz_class* t = rest.at(n);
    AddScaledProduct(r, t, l1, rest, n - 1);
    r.MarkMulAdd(an, t, 0, 1, 1);
    for (int x = 0; x < r.width(); ++x) t[x] = an[x] - lo_neutral.at(n)[x];
    mpz_class* c = l.at(n);
    r.MarkMulAdd(c, (up != nullptr ? *up : l).at(n - 1), 0, 1, 1);
    Add(r, c, an);
  }
  return l;
}

JetSeries SolvePlainLoCost(int order, std::shared_ptr<const MarkRing> ring) {
  const Series plain = SolvePlain(order);
  const Series neutral = SolveNormalForms(order).neutral;
  const LoNormalForms lo = SolveLoNormalForms(order, ring, neutral, -1, nullptr);
  return SolveLoLevel(order, ring, -1, plain * plain, neutral, plain,
                      lo.neutral, nullptr);
}

}  // namespace internal

JetSeries SolveMarkedPlain(Parameter p, int order,
                           std::shared_ptr<const MarkRing> ring) {
  switch (p) {
    case Parameter::kNone:
      return JetSeries::Lift(ring, SolvePlain(order));
    case Parameter::kVariables:
      return SolveVariables(order, ring);
    case Parameter::kRedexes:
      return SolveRedexes(order, ring);
    case Parameter::kSuccessors:
      return SolveJoint(order, ring, {.successors = 0});
    case Parameter::kAbstractions:
      return SolveJoint(order, ring, {.abstractions = 0});
    case Parameter::kJoint4:
      if (ring->mode() != MarkMode::kJet || ring->marks() < 4) {
        throw std::invalid_argument("joint4 needs a jet ring with 4 marks");
      }
      return SolveJoint(order, ring, {0, 1, 2, 3});
    case Parameter::kHeadAbstractions:
      return SolveHeadAbstractions(order, ring);
    case Parameter::kLoCost:
      return internal::SolvePlainLoCost(order, ring);
    case Parameter::kIndexValueProfile:
      return SolveIndexProfile(order, ring);
    case Parameter::kFreeVariables:
      return SolveFreeVariables(order, ring);
  }
  throw std::invalid_argument("unknown parameter");
}

}  // namespace census
