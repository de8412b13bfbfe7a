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

#include "census/profiles.h"

#include <vector>

#include "census/systems.h"

namespace census {
namespace {

// Level m of either the constant plain ladder or the closed ladder, with the
// matching supply of admissible indices.
class LadderView {
 public:
  LadderView(int order, int levels_needed, bool closed) : closed_(closed) {
    if (closed) {
      levels_ = SolveOpenLadder(order, levels_needed + order + 1);
    } else {
      levels_.push_back(SolvePlain(order));
    }
    order_ = order;
  }

  const Series& level(int m) const { return closed_ ? levels_[m] : levels_[0]; }

  Series supply(int m) const {
    return Series::Run(order_, 1, closed_ ? m : order_);
  }

 private:
  bool closed_;
  int order_ = 0;
  std::vector<Series> levels_;
};

// x = base + c * z * L * x, solved coefficient by coefficient.
Series SolveLinear(const Series& base, const Series& l, int c) {
  Series x(base.order());
  for (int n = 0; n <= base.order(); ++n) {
    mpz_class v = base[n];
    if (n >= 1) {
      mpz_class conv;
      AddProductCoefficient(conv, l, x, n - 1);
      v += c * conv;
    }
    x[n] = v;
  }
  return x;
}

Series Base(NodeKind kind, const LadderView& view, int m) {
  const Series& l = view.level(m);
  const int order = l.order();
  switch (kind) {
    case NodeKind::kIndex:
      return view.supply(m);
    case NodeKind::kAbs:
      return view.level(m + 1).Shift(1).Truncate(order);
    case NodeKind::kApp:
      return (l * l).Shift(1).Truncate(order);
  }
  return Series(order);
}

}  // namespace

Series LevelProfileSeries(NodeKind kind, HeightKind height, int k, int order,
                          bool closed) {
  const LadderView view(order, k + 1, closed);
  if (height == HeightKind::kUnary) {
    // D_{m,0} = base_m / (1 - 2zL_m);  D_{m,k} = z D_{m+1,k-1} / (1 - 2zL_m)
    Series d = SolveLinear(Base(kind, view, k), view.level(k), 2);
    for (int m = k - 1; m >= 0; --m) {
      d = SolveLinear(d.Shift(1).Truncate(order), view.level(m), 2);
    }
    return d;
  }
  // D_{m,j} = z D_{m+1,j-1} + 2zL_m D_{m,j-1}, needed for m + j <= k.
  std::vector<Series> row;
  for (int m = 0; m <= k; ++m) row.push_back(Base(kind, view, m));
  for (int j = 1; j <= k; ++j) {
    std::vector<Series> next;
    for (int m = 0; m + j <= k; ++m) {
      Series below = row[m + 1].Shift(1).Truncate(order);
      Series across = (view.level(m) * row[m]).Shift(1).Truncate(order);
      next.push_back(below + across * mpz_class(2));
    }
    row = std::move(next);
  }
  return row[0];
}

}  // namespace census
