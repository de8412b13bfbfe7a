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

#ifndef CENSUS_ASYMPTOTICS_H_
#define CENSUS_ASYMPTOTICS_H_

#include <map>
#include <string>
#include <vector>

namespace census {

using Real = long double;

// Printed unary height constant; b_inf = kBeta / 2.
inline constexpr Real kBeta = 4.301868701457L;

// Positive root of z^3 + z^2 + 3z - 1.
Real ComputeRho();
// 1/(2(1-rho)) sqrt((rho+2)/pi)
Real ComputeC(Real rho);

// L(z) for 0 < z <= rho from the closed form.
Real PlainValue(Real z);
// Square-root coefficient of L at rho derived from the radicand
// (1-z)^2 - 4z^2/(1-z).
Real DerivedBInf(Real rho);

struct PuiseuxLadder {
  std::vector<Real> a;  // a_0..a_M
  std::vector<Real> b;  // b_0..b_M
};
// Backward recursion from a_M = (1-rho)/(2 rho), b_M = b_inf.
PuiseuxLadder ComputeLadder(Real rho, int depth, Real b_inf);

// sum_{k<M} (1 - b_k/b_inf)
Real MOpennessMean(const PuiseuxLadder& ladder, Real b_inf);

struct HeadAbstractionLaw {
  std::vector<Real> probabilities;  // P(h) for h < M, then the tail mass
  Real mean = 0;
  Real b0_at_one = 0;  // 2 rho sum rho^m a_m b_m, tail included
};
HeadAbstractionLaw ClosedHeadAbstractions(Real rho, const PuiseuxLadder& l);

// How neutral left branches are marked in the subtracted term of the
// leftmost-outermost system: by size (the classical closed form) or by their
// own search cost (consistent with LoCost).
enum class LoNeutralMarking { kBySize, kByCost };

// Limit mean of the leftmost-outermost search cost for plain terms.
Real PlainLoMean(Real rho, Real b_inf, LoNeutralMarking marking);

struct NamedConstant {
  Real value;
  Real tolerance;
};

struct AsymptoticTable {
  Real rho = 0;
  Real c_plain = 0;
  Real a_inf = 0;
  Real b_inf = 0;
  PuiseuxLadder ladder;
  std::map<std::string, NamedConstant> derived;
};

AsymptoticTable ComputeAsymptoticTable(int depth = 64);

// Smallest z at which the finite h-shallow system becomes singular; bisects
// down to `tolerance` or to the working precision.
Real HShallowSingularity(int h, Real tolerance = 0);
// Values L_0..L_{h+1} of the h-shallow system at z (level h+1 is the
// saturated one). Negative radicands clamp to zero.
std::vector<Real> HShallowValues(int h, Real z);
// Values L_0..L_depth of the m-open ladder at z, closed by L(z).
std::vector<Real> OpenLadderValues(int depth, Real z);

}  // namespace census

#endif  // CENSUS_ASYMPTOTICS_H_
