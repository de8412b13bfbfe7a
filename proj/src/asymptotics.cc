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

#include "census/asymptotics.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace census {
namespace {

constexpr Real kPi = std::numbers::pi_v<long double>;

Real Cubic(Real z) { return ((z + 1) * z + 3) * z - 1; }
Real CubicPrime(Real z) { return (3 * z + 2) * z + 3; }

// First-order numbers in the mark u around u = 1.
struct Dual {
  Real v;
  Real d;
};
Dual operator+(Dual a, Dual b) { return {a.v + b.v, a.d + b.d}; }
Dual operator-(Dual a, Dual b) { return {a.v - b.v, a.d - b.d}; }
Dual operator*(Dual a, Dual b) { return {a.v * b.v, a.d * b.v + a.v * b.d}; }
Dual operator/(Dual a, Dual b) {
  return {a.v / b.v, (a.d * b.v - a.v * b.d) / (b.v * b.v)};
}
Dual Const(Real c) { return {c, 0}; }
Dual Sqrt(Dual a) {
  const Real s = std::sqrt(a.v);
  return {s, a.d / (2 * s)};
}

// Neutral-term series M(x) = (1 - x - sqrt((1+x)(1-3x))) / (2x).
Dual Neutral(Dual x) {
  const Dual one = Const(1);
  return (one - x - Sqrt((one + x) * (one - Const(3) * x))) / (Const(2) * x);
}

Real RootOf(Real c) { return c > 0 ? std::sqrt(c) : 0; }

}  // namespace

Real ComputeRho() {
  Real lo = 0, hi = 1;
  for (int i = 0; i < 40; ++i) {
    const Real mid = (lo + hi) / 2;
    (Cubic(mid) < 0 ? lo : hi) = mid;
  }
  Real z = (lo + hi) / 2;
  for (int i = 0; i < 6; ++i) z -= Cubic(z) / CubicPrime(z);
  return z;
}

Real ComputeC(Real rho) {
  return 1 / (2 * (1 - rho)) * std::sqrt((rho + 2) / kPi);
}

Real PlainValue(Real z) {
  const Real rho = ComputeRho();
  if (z >= rho) return (1 - rho) / (2 * rho);
  const Real delta = (1 - z) * (1 - z) - 4 * z * z / (1 - z);
  return (1 - z - RootOf(delta)) / (2 * z);
}

Real DerivedBInf(Real rho) {
  const Real one_minus = 1 - rho;
  const Real delta_prime =
      -2 * one_minus - (8 * rho - 4 * rho * rho) / (one_minus * one_minus);
  return std::sqrt(-rho * delta_prime) / (2 * rho);
}

PuiseuxLadder ComputeLadder(Real rho, int depth, Real b_inf) {
  if (depth < 1) throw std::invalid_argument("ladder depth must be positive");
  PuiseuxLadder l;
  l.a.assign(depth + 1, 0);
  l.b.assign(depth + 1, 0);
  l.a[depth] = (1 - rho) / (2 * rho);
  l.b[depth] = b_inf;
  const Real r2 = 4 * rho * rho;
  for (int m = depth - 1; m >= 0; --m) {
    const Real radicand = 1 - r2 * (1 - std::pow(rho, m)) / (1 - rho) -
                          r2 * l.a[m + 1];
    if (radicand <= 0) throw std::domain_error("negative ladder radicand");
    const Real root = std::sqrt(radicand);
    l.a[m] = (1 - root) / (2 * rho);
    l.b[m] = rho * l.b[m + 1] / root;
  }
  return l;
}

Real MOpennessMean(const PuiseuxLadder& ladder, Real b_inf) {
  Real sum = 0;
  for (std::size_t k = 0; k + 1 < ladder.b.size(); ++k) {
    sum += 1 - ladder.b[k] / b_inf;
  }
  return sum;
}

HeadAbstractionLaw ClosedHeadAbstractions(Real rho,
                                          const PuiseuxLadder& ladder) {
  const int depth = static_cast<int>(ladder.a.size()) - 1;
  HeadAbstractionLaw law;
  std::vector<Real> weight(depth);
  Real total = 0, first = 0, power = 1;
  for (int m = 0; m < depth; ++m) {
    weight[m] = 2 * rho * power * ladder.a[m] * ladder.b[m];
    total += weight[m];
    first += m * weight[m];
    power *= rho;
  }
  // Levels at and beyond the depth sit at the limit values.
  const Real lim = 2 * rho * ladder.a[depth] * ladder.b[depth];
  const Real tail = lim * power / (1 - rho);
  const Real tail_first =
      lim * power * (depth * (1 - rho) + rho) / ((1 - rho) * (1 - rho));
  total += tail;
  first += tail_first;
  for (Real w : weight) law.probabilities.push_back(w / total);
  law.probabilities.push_back(tail / total);
  law.mean = first / total;
  law.b0_at_one = total;
  return law;
}

Real PlainLoMean(Real rho, Real b_inf, LoNeutralMarking marking) {
  const Real a = (1 - rho) / (2 * rho);
  const Dual u{1, 1};
  const Dual x = Const(rho) * u;
  const Dual one = Const(1);
  const Dual m_den = Neutral(x);
  Dual m = m_den;
  if (marking == LoNeutralMarking::kByCost) {
    m = x / Const(1 - rho) / (one - x * m_den / (one - x));
  }
  const Dual av = Const(a);
  const Dual bv = Const(b_inf);
  // L = Num(s) / Den(s) with L1 = a - b s and s = sqrt(1 - z/rho).
  const Dual num0 = x / Const(1 - rho) + x * x * av * av - x * m * av;
  const Dual num1 = x * m * bv - Const(2) * x * x * av * bv;
  const Dual den0 = (one - x) - x * m_den - x * (one - x) * av;
  const Dual den1 = x * (one - x) * bv;
  // b(u) = -d/ds (Num/Den) at s = 0
  const Dual b = (num0 * den1 - num1 * den0) / (den0 * den0);
  return b.d / b.v;
}

AsymptoticTable ComputeAsymptoticTable(int depth) {
  AsymptoticTable t;
  t.rho = ComputeRho();
  const Real rho = t.rho;
  t.c_plain = ComputeC(rho);
  t.a_inf = (1 - rho) / (2 * rho);
  t.b_inf = kBeta / 2;
  t.ladder = ComputeLadder(rho, depth, t.b_inf);
  const HeadAbstractionLaw heads = ClosedHeadAbstractions(rho, t.ladder);
  const Real beta = 2 * t.b_inf;
  const Real gamma = beta * rho;
  // Ladder truncation error decays like rho^depth.
  const Real ladder_tol = std::max(std::pow(rho, depth), 1e-13L);

  auto& d = t.derived;
  d["rho"] = {rho, 1e-15L};
  d["C_plain"] = {t.c_plain, 1e-15L};
  d["a_inf"] = {t.a_inf, 1e-15L};
  d["b_inf"] = {t.b_inf, 1e-12L};
  d["b_inf_derived"] = {DerivedBInf(rho), 1e-12L};
  d["head_abs_mean_plain"] = {rho / (1 - rho), 1e-15L};
  d["head_abs_mean_closed"] = {heads.mean, ladder_tol};
  d["lo_mean_plain"] = {
      PlainLoMean(rho, t.b_inf, LoNeutralMarking::kBySize), 1e-12L};
  d["lo_mean_plain_traversal"] = {
      PlainLoMean(rho, t.b_inf, LoNeutralMarking::kByCost), 1e-12L};
  d["free_var_mean"] = {2 / ((1 - rho) * (1 - rho) * (1 - rho)), 1e-15L};
  d["m_openness_mean"] = {MOpennessMean(t.ladder, t.b_inf), ladder_tol};
  d["closed_density"] = {t.ladder.b[0] / t.b_inf, ladder_tol};
  d["index_value_geometric_ratio"] = {rho, 1e-15L};
  d["index_value_mean_plain"] = {rho / (1 - rho), 1e-15L};
  d["height_unary_C"] = {beta, 1e-12L};
  d["height_natural_C"] = {gamma, 1e-12L};
  d["height_unary_mean_coefficient"] = {std::sqrt(kPi) / beta, 1e-12L};
  d["height_natural_mean_coefficient"] = {std::sqrt(kPi) / gamma, 1e-12L};
  d["height_unary_peak_coefficient"] = {std::sqrt(2.0L) / beta, 1e-12L};
  d["height_natural_peak_coefficient"] = {std::sqrt(2.0L) / gamma, 1e-12L};
  const Real om = 1 - rho;
  d["profile_variables_unary"] = {om * om / (2 * rho * rho), 1e-15L};
  d["profile_variables_natural"] = {om * om / 2, 1e-15L};
  d["profile_abstractions_unary"] = {om / rho, 1e-15L};
  d["profile_abstractions_natural"] = {rho * om, 1e-15L};
  d["profile_applications_unary"] = {om * om / (2 * rho * rho), 1e-15L};
  d["profile_applications_natural"] = {om * om / 2, 1e-15L};
  return t;
}

std::vector<Real> HShallowValues(int h, Real z) {
  std::vector<Real> values(h + 2);
  const Real om = 1 - z;
  const Real q_top = z * (1 - std::pow(z, h + 1)) / om;
  values[h + 1] = (om - RootOf(om * om - 4 * z * q_top)) / (2 * z);
  for (int m = h; m >= 0; --m) {
    const Real q = z * (1 - std::pow(z, m)) / om;
    values[m] =
        (1 - RootOf(1 - 4 * z * (z * values[m + 1] + q))) / (2 * z);
  }
  return values;
}

Real HShallowSingularity(int h, Real tolerance) {
  auto singular = [h](Real z) {
    const Real om = 1 - z;
    const Real q_top = z * (1 - std::pow(z, h + 1)) / om;
    const Real top = om * om - 4 * z * q_top;
    if (top < 0) return true;
    Real upper = (om - std::sqrt(top)) / (2 * z);
    for (int m = h; m >= 0; --m) {
      const Real q = z * (1 - std::pow(z, m)) / om;
      const Real r = 1 - 4 * z * (z * upper + q);
      if (r < 0) return true;
      upper = (1 - std::sqrt(r)) / (2 * z);
    }
    return false;
  };
  Real lo = ComputeRho() * (1 - 1e-12L), hi = 0.5L;
  while (hi - lo > tolerance) {
    const Real mid = (lo + hi) / 2;
    if (mid <= lo || mid >= hi) break;
    (singular(mid) ? hi : lo) = mid;
  }
  return lo;
}

std::vector<Real> OpenLadderValues(int depth, Real z) {
  std::vector<Real> values(depth + 1);
  values[depth] = PlainValue(z);
  for (int m = depth - 1; m >= 0; --m) {
    const Real q = z * (1 - std::pow(z, m)) / (1 - z);
    values[m] = (1 - RootOf(1 - 4 * z * (z * values[m + 1] + q))) / (2 * z);
  }
  return values;
}

}  // namespace census
