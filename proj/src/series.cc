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

#include "census/series.h"

namespace census {

QSeries ToRational(const Series& s) {
  QSeries q(s.order());
  for (int i = 0; i <= s.order(); ++i) q[i] = s[i];
  return q;
}

Series ToInteger(const QSeries& q) {
  Series s(q.order());
  for (int i = 0; i <= q.order(); ++i) {
    if (q[i].get_den() != 1) {
      throw std::domain_error("coefficient " + std::to_string(i) +
                              " is not an integer");
    }
    s[i] = q[i].get_num();
  }
  return s;
}

QSeries Sqrt(const QSeries& s) {
  if (s[0] != 1) throw std::domain_error("sqrt needs constant term 1");
  QSeries r(s.order());
  r[0] = 1;
  // r^2 = s, so 2 r_0 r_n = s_n - sum_{0<i<n} r_i r_{n-i}.
  for (int n = 1; n <= s.order(); ++n) {
    mpq_class acc = s[n];
    for (int i = 1; i < n; ++i) acc -= r[i] * r[n - i];
    r[n] = acc / 2;
  }
  return r;
}

std::string SeriesCsv(const Series& s, int first) {
  std::string out = "n,coefficient\n";
  for (int n = first; n <= s.order(); ++n) {
    out += std::to_string(n) + "," + s[n].get_str() + "\n";
  }
  return out;
}

}  // namespace census
