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

#ifndef CENSUS_PROFILES_H_
#define CENSUS_PROFILES_H_

#include "census/series.h"
#include "census/statistics.h"
#include "census/term.h"

namespace census {

// Series whose [z^n] is the number of `kind` nodes at height k, summed over
// all plain (or closed) terms of size n.
Series LevelProfileSeries(NodeKind kind, HeightKind height, int k, int order,
                          bool closed);

}  // namespace census

#endif  // CENSUS_PROFILES_H_
