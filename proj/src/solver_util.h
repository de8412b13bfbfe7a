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

#ifndef CENSUS_SOLVER_UTIL_H_
#define CENSUS_SOLVER_UTIL_H_

#include <vector>

#include "census/marks.h"
#include "census/series.h"

namespace census::internal {

// Scratch element of ring width.
class Scratch {
 public:
  explicit Scratch(const MarkRing& r) : v_(r.width()) {}
  mpz_class* Zeroed() {
    for (mpz_class& x : v_) x = 0;
    return v_.data();
  }
  mpz_class* data() { return v_.data(); }

 private:
  std::vector<mpz_class> v_;
};

// acc += [z^n] a*b
inline void AddProduct(const MarkRing& r, mpz_class* acc, const JetSeries& a,
                       const JetSeries& b, int n) {
  for (int i = 0; i <= n; ++i) r.MulAdd(acc, a.at(i), b.at(n - i));
}

// acc += [z^n] a^2
inline void AddSquare(const MarkRing& r, mpz_class* acc, const JetSeries& a,
                      int n, Scratch& scratch) {
  mpz_class* half = scratch.Zeroed();
  for (int i = 0; 2 * i < n; ++i) r.MulAdd(half, a.at(i), a.at(n - i));
  for (int x = 0; x < r.width(); ++x) acc[x] += 2 * half[x];
  if (n % 2 == 0) r.MulAdd(acc, a.at(n / 2), a.at(n / 2));
}

// acc += [z^n] s*a for an unmarked s
inline void AddScaledProduct(const MarkRing& r, mpz_class* acc,
                             const Series& s, const JetSeries& a, int n) {
  for (int i = 0; i <= n; ++i) {
    if (sgn(s[n - i]) != 0) r.ScaledAdd(acc, a.at(i), s[n - i]);
  }
}

inline void Assign(const MarkRing& r, mpz_class* dst, const mpz_class* src) {
  for (int x = 0; x < r.width(); ++x) dst[x] = src[x];
}

inline void Add(const MarkRing& r, mpz_class* dst, const mpz_class* src) {
  for (int x = 0; x < r.width(); ++x) dst[x] += src[x];
}

// Neutral and normal terms marked by LO cost at one level: indices of size at
// most `indices` (all when negative), the normal series of the level above in
// `normal_up` (the level itself when null).
struct LoNormalForms {
  JetSeries neutral;
  JetSeries normal;
};
LoNormalForms SolveLoNormalForms(int order, std::shared_ptr<const MarkRing> ring,
                                 const Series& neutral, int indices,
                                 const JetSeries* normal_up);

// L = zu L_up + A,
// A = zu(indices) + z^2u^2 R + zu M(zu) L + zu (A - M~) L1,
// with M~ the LO-marked neutral terms of the level.
JetSeries SolveLoLevel(int order, std::shared_ptr<const MarkRing> ring,
                       int indices, const Series& redex_pairs,
                       const Series& neutral, const Series& l1,
                       const JetSeries& lo_neutral, const JetSeries* up);

}  // namespace census::internal

#endif  // CENSUS_SOLVER_UTIL_H_
