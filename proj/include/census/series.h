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

#ifndef CENSUS_SERIES_H_
#define CENSUS_SERIES_H_

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <type_traits>
#include <string>
#include <vector>

namespace census {

// Truncated power series in z with exact coefficients, holding [z^0..z^N].
// Binary operations on mismatched orders truncate to the smaller order.
template <typename T>
class BasicSeries {
 public:
  BasicSeries() : coef_(1) {}
  explicit BasicSeries(int order) : coef_(static_cast<std::size_t>(order) + 1) {
    if (order < 0) throw std::invalid_argument("negative order");
  }
  BasicSeries(int order, std::vector<T> coefficients)
      : BasicSeries(order) {
    for (std::size_t i = 0; i < coefficients.size() && i < coef_.size(); ++i) {
      coef_[i] = std::move(coefficients[i]);
    }
  }

  static BasicSeries Monomial(int order, int power, const T& c = T(1)) {
    BasicSeries s(order);
    if (power >= 0 && power <= order) s.coef_[power] = c;
    return s;
  }

  // z^lo + z^{lo+1} + ... + z^hi, i.e. z^lo (1 - z^{hi-lo+1}) / (1 - z).
  static BasicSeries Run(int order, int lo, int hi) {
    BasicSeries s(order);
    for (int i = std::max(lo, 0); i <= std::min(hi, order); ++i) s.coef_[i] = 1;
    return s;
  }

  int order() const { return static_cast<int>(coef_.size()) - 1; }
  const T& operator[](int n) const { return coef_[n]; }
  T& operator[](int n) { return coef_[n]; }
  const std::vector<T>& coefficients() const { return coef_; }

  BasicSeries Truncate(int order) const {
    BasicSeries s(std::min(order, this->order()));
    std::copy_n(coef_.begin(), s.coef_.size(), s.coef_.begin());
    return s;
  }

  BasicSeries operator+(const BasicSeries& o) const {
    BasicSeries s(std::min(order(), o.order()));
    for (int i = 0; i <= s.order(); ++i) s.coef_[i] = coef_[i] + o.coef_[i];
    return s;
  }
  BasicSeries operator-(const BasicSeries& o) const {
    BasicSeries s(std::min(order(), o.order()));
    for (int i = 0; i <= s.order(); ++i) s.coef_[i] = coef_[i] - o.coef_[i];
    return s;
  }
  BasicSeries operator-() const {
    BasicSeries s(order());
    for (int i = 0; i <= s.order(); ++i) s.coef_[i] = -coef_[i];
    return s;
  }
  BasicSeries operator*(const T& c) const {
    BasicSeries s(order());
    for (int i = 0; i <= s.order(); ++i) s.coef_[i] = coef_[i] * c;
    return s;
  }
  BasicSeries operator*(const BasicSeries& o) const {
    BasicSeries s(std::min(order(), o.order()));
    for (int n = 0; n <= s.order(); ++n) {
      for (int i = 0; i <= n; ++i) s.coef_[n] += coef_[i] * o.coef_[n - i];
    }
    return s;
  }

  // Multiplies by z^k (k may be negative when the low coefficients vanish).
  BasicSeries Shift(int k) const {
    const int new_order = k >= 0 ? order() : order() + k;
    BasicSeries s(new_order);
    for (int n = 0; n <= new_order; ++n) {
      const int src = n - k;
      if (src >= 0 && src <= order()) s.coef_[n] = coef_[src];
    }
    if (k < 0) {
      for (int i = 0; i < -k && i <= order(); ++i) {
        if (coef_[i] != 0) throw std::domain_error("shift drops a nonzero term");
      }
    }
    return s;
  }

  // 1/s. Over the integers the constant term must be a unit.
  BasicSeries Reciprocal() const {
    const T& c0 = coef_[0];
    if (c0 == 0) throw std::domain_error("reciprocal of a non-unit series");
    if constexpr (std::is_same_v<T, mpz_class>) {
      if (c0 != 1 && c0 != -1) {
        throw std::domain_error("integer reciprocal needs constant term +-1");
      }
    }
    BasicSeries r(order());
    r.coef_[0] = T(1) / c0;
    for (int n = 1; n <= order(); ++n) {
      T acc = 0;
      for (int i = 1; i <= n; ++i) acc += coef_[i] * r.coef_[n - i];
      r.coef_[n] = -acc / c0;
    }
    return r;
  }

  bool operator==(const BasicSeries&) const = default;

 private:
  std::vector<T> coef_;
};

using Series = BasicSeries<mpz_class>;
using QSeries = BasicSeries<mpq_class>;

QSeries ToRational(const Series& s);
// Throws when a coefficient is not an integer.
Series ToInteger(const QSeries& s);

// Square root with constant term 1.
QSeries Sqrt(const QSeries& s);

// [z^n] (a * b) for integer series, exploiting nothing but the bounds.
inline void AddProductCoefficient(mpz_class& acc, const Series& a,
                                  const Series& b, int n) {
  for (int i = 0; i <= n; ++i) mpz_addmul(acc.get_mpz_t(), a[i].get_mpz_t(),
                                          b[n - i].get_mpz_t());
}

// [z^n] a^2 using the symmetry of the convolution.
inline void AddSquareCoefficient(mpz_class& acc, const Series& a, int n) {
  mpz_class half;
  for (int i = 0; 2 * i < n; ++i) {
    mpz_addmul(half.get_mpz_t(), a[i].get_mpz_t(), a[n - i].get_mpz_t());
  }
  acc += 2 * half;
  if (n % 2 == 0) acc += a[n / 2] * a[n / 2];
}

std::string SeriesCsv(const Series& s, int first = 0);

}  // namespace census

#endif  // CENSUS_SERIES_H_
