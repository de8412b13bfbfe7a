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

#ifndef CENSUS_MARKS_H_
#define CENSUS_MARKS_H_

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <vector>

#include "census/series.h"

namespace census {

enum class MarkMode { kUnmarked, kJet, kPolynomial };

// Coefficient ring for marked series. Elements are `width()` consecutive
// integers.
//   kUnmarked:   a plain integer.
//   kJet:        polynomial in e_i = u_i - 1 truncated at total degree J.
//   kPolynomial: polynomial in a single mark u, truncated at a maximum degree.
// A mark index of -1 stands for a mark fixed at 1.
class MarkRing {
 public:
  static MarkRing Unmarked();
  static MarkRing Jet(int marks, int degree);
  static MarkRing Polynomial(int max_degree);

  MarkMode mode() const { return mode_; }
  int width() const { return width_; }
  int marks() const { return marks_; }
  int degree() const { return degree_; }

  // Jet slots: 0 is the constant term; LinearSlot(i) holds e_i;
  // QuadraticSlot(i, j) holds e_i e_j. Returns -1 when truncated away.
  int LinearSlot(int i) const;
  int QuadraticSlot(int i, int j) const;

  // acc += a * b
  void MulAdd(mpz_class* acc, const mpz_class* a, const mpz_class* b) const;
  // acc += s * a
  void ScaledAdd(mpz_class* acc, const mpz_class* a, const mpz_class& s) const;
  // acc += s * u_mark^k * a
  void MarkMulAdd(mpz_class* acc, const mpz_class* a, int mark,
                  std::uint64_t k, const mpz_class& s) const;
  // acc += s * u_mark^k
  void AddMark(mpz_class* acc, int mark, std::uint64_t k,
               const mpz_class& s) const;

  // Value with every mark set to 1.
  mpz_class Erase(const mpz_class* a) const;

 private:
  MarkRing() = default;
  void BuildJetTables();

  MarkMode mode_ = MarkMode::kUnmarked;
  int width_ = 1;
  int marks_ = 0;
  int degree_ = 0;
  std::vector<std::vector<int>> exponents_;  // per slot
  std::vector<int> total_degree_;
  // pairs_[x]: (y, slot of x*y) for every y with deg x + deg y <= J.
  std::vector<std::vector<std::pair<int, int>>> pairs_;
  // raise_[mark][x * (J + 1) + j]: slot of x * e_mark^j, or -1.
  std::vector<std::vector<int>> raise_;
};

// Truncated power series in z whose coefficients live in a MarkRing.
class JetSeries {
 public:
  JetSeries(std::shared_ptr<const MarkRing> ring, int order);

  const MarkRing& ring() const { return *ring_; }
  std::shared_ptr<const MarkRing> ring_ptr() const { return ring_; }
  int order() const { return order_; }
  mpz_class* at(int n) { return &data_[static_cast<std::size_t>(n) * width_]; }
  const mpz_class* at(int n) const {
    return &data_[static_cast<std::size_t>(n) * width_];
  }

  // Every mark set to 1.
  Series Erase() const;
  // Embeds an unmarked series as a mark-free element sequence.
  static JetSeries Lift(std::shared_ptr<const MarkRing> ring, const Series& s);

  // Polynomial mode: counts by parameter value at size n.
  std::vector<mpz_class> Distribution(int n) const;

  struct Moments {
    mpq_class mean;
    mpq_class variance;  // requires degree >= 2 in jet mode
  };
  // Throws std::domain_error when [z^n] is zero.
  Moments MomentsAt(int n, int mark = 0) const;
  mpq_class CovarianceAt(int n, int i, int j) const;

 private:
  std::shared_ptr<const MarkRing> ring_;
  int order_;
  int width_;
  std::vector<mpz_class> data_;
};

}  // namespace census

#endif  // CENSUS_MARKS_H_
