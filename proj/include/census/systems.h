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

#ifndef CENSUS_SYSTEMS_H_
#define CENSUS_SYSTEMS_H_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "census/marks.h"
#include "census/series.h"

namespace census {

// Counting series for plain terms, L = zL + zL^2 + z/(1-z).
Series SolvePlain(int order);
// Same series by repeated substitution into the defining equation.
Series SolvePlainFixedPoint(int order);
// Same series from (1 - z - sqrt((1-z)^2 - 4z^2/(1-z))) / (2z).
Series SolvePlainClosedForm(int order);

struct NormalForms {
  Series normal;   // N = zN + M
  Series neutral;  // M = zMN + z/(1-z)
};
NormalForms SolveNormalForms(int order);
// Neutral terms via (1 - z - sqrt((1+z)(1-3z))) / (2z).
Series NeutralClosedForm(int order);

enum class Parameter {
  kNone,
  kVariables,
  kRedexes,
  kSuccessors,
  kAbstractions,
  kJoint4,
  kHeadAbstractions,
  kLoCost,
  kIndexValueProfile,
  kFreeVariables,
};

// Throws std::invalid_argument for unknown names.
Parameter ParseParameter(std::string_view name);
std::string ParameterName(Parameter p);

// Mark slots for the joint variables/redexes/successors/abstractions system;
// -1 leaves a statistic unmarked.
struct JointMarks {
  int variables = -1;
  int redexes = -1;
  int successors = -1;
  int abstractions = -1;
};

JetSeries SolveJoint(int order, std::shared_ptr<const MarkRing> ring,
                     const JointMarks& marks);

// Marked plain-term series. Single parameters use mark 0; kJoint4 uses marks
// 0..3 for variables, redexes, successors, abstractions. kIndexValueProfile
// marks one index occurrence by its value, so its coefficients count
// occurrences rather than terms.
JetSeries SolveMarkedPlain(Parameter p, int order,
                           std::shared_ptr<const MarkRing> ring);

// Levels 0..depth of the m-open ladder; the level `depth` is the plain series.
std::vector<Series> SolveOpenLadder(int order, int depth);

// Neutral terms and normal forms with at most m free indices, levels 0..depth.
struct OpenNormalForms {
  std::vector<Series> normal;
  std::vector<Series> neutral;
};
OpenNormalForms SolveOpenNormalForms(int order, int depth);

// Finite prefix of the forward-recursive m-open system, closed at `depth` by
// the plain (marked) solution.
struct TruncatedSystem {
  int depth = 0;
  Parameter parameter = Parameter::kNone;
  std::vector<JetSeries> levels;  // levels[depth] is the closure

  const JetSeries& closed() const { return levels.front(); }
};

TruncatedSystem SolveTruncatedClosed(int order, int depth, Parameter p,
                                     std::shared_ptr<const MarkRing> ring);

// Closed terms whose indices never exceed h.
Series SolveHShallow(int order, int h);

}  // namespace census

#endif  // CENSUS_SYSTEMS_H_
