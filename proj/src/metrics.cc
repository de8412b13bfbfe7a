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

#include "census/metrics.h"

#include <algorithm>

namespace census {

SubtermTable ComputeSubterms(const Term& t) {
  const std::size_t n = t.node_count();
  SubtermTable table;
  table.size.resize(n);
  table.openness.resize(n);
  table.normal.resize(n);
  // Children follow their parent in preorder, so a reverse sweep sees every
  // child before the parent.
  for (std::size_t p = n; p-- > 0;) {
    const Node& node = t.node(p);
    switch (node.kind) {
      case NodeKind::kIndex:
        table.size[p] = std::uint64_t{node.value} + 1;
        table.openness[p] = std::uint64_t{node.value} + 1;
        table.normal[p] = 1;
        break;
      case NodeKind::kAbs: {
        const std::size_t b = p + 1;
        table.size[p] = table.size[b] + 1;
        table.openness[p] = table.openness[b] > 0 ? table.openness[b] - 1 : 0;
        table.normal[p] = table.normal[b];
        break;
      }
      case NodeKind::kApp: {
        const std::size_t l = t.Left(p);
        const std::size_t r = t.Right(p);
        table.size[p] = table.size[l] + table.size[r] + 1;
        table.openness[p] = std::max(table.openness[l], table.openness[r]);
        table.normal[p] = t.kind(l) != NodeKind::kAbs && table.normal[l] &&
                          table.normal[r];
        break;
      }
    }
  }
  return table;
}

TermMetrics ComputeMetrics(const Term& t, const SubtermTable& table) {
  TermMetrics m;
  for (std::size_t p = 0; p < t.node_count(); ++p) {
    const Node& node = t.node(p);
    switch (node.kind) {
      case NodeKind::kIndex:
        ++m.variables;
        m.successors += node.value;
        break;
      case NodeKind::kAbs:
        ++m.abstractions;
        break;
      case NodeKind::kApp:
        ++m.applications;
        if (t.kind(t.Left(p)) == NodeKind::kAbs) ++m.redexes;
        break;
    }
  }
  m.size = table.size[0];
  std::size_t h = 0;
  while (t.kind(h) == NodeKind::kAbs) ++h;
  m.head_abstractions = h;
  m.openness = table.openness[0];
  if (m.openness > 0) {
    m.generalized_openness = static_cast<std::int64_t>(m.openness);
  } else {
    m.generalized_openness = -static_cast<std::int64_t>(h - table.openness[h]);
  }
  return m;
}

TermMetrics ComputeMetrics(const Term& t) {
  return ComputeMetrics(t, ComputeSubterms(t));
}

std::uint64_t Openness(const Term& t) { return ComputeSubterms(t).openness[0]; }

std::int64_t GeneralizedOpenness(const Term& t) {
  return ComputeMetrics(t).generalized_openness;
}

std::uint64_t HeadAbstractions(const Term& t) {
  std::size_t h = 0;
  while (t.kind(h) == NodeKind::kAbs) ++h;
  return h;
}

bool IsNormalForm(const Term& t) { return ComputeSubterms(t).normal[0] != 0; }

bool IsNeutral(const Term& t) {
  return t.kind(0) != NodeKind::kAbs && IsNormalForm(t);
}

}  // namespace census
