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

#include "census/marks.h"

#include <map>
#include <stdexcept>

namespace census {

MarkRing MarkRing::Unmarked() {
  MarkRing r;
  r.BuildJetTables();
  return r;
}

MarkRing MarkRing::Jet(int marks, int degree) {
  if (marks < 1 || degree < 1 || degree > 2) {
    throw std::invalid_argument("jets support 1.. marks and degree 1 or 2");
  }
  MarkRing r;
  r.mode_ = MarkMode::kJet;
  r.marks_ = marks;
  r.degree_ = degree;
  r.BuildJetTables();
  return r;
}

MarkRing MarkRing::Polynomial(int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("negative degree");
  MarkRing r;
  r.mode_ = MarkMode::kPolynomial;
  r.marks_ = 1;
  r.degree_ = max_degree;
  r.width_ = max_degree + 1;
  return r;
}

void MarkRing::BuildJetTables() {
  exponents_.clear();
  exponents_.push_back(std::vector<int>(marks_, 0));
  if (degree_ >= 1) {
    for (int i = 0; i < marks_; ++i) {
      std::vector<int> e(marks_, 0);
      e[i] = 1;
      exponents_.push_back(e);
    }
  }
  if (degree_ >= 2) {
    for (int i = 0; i < marks_; ++i) {
      for (int j = i; j < marks_; ++j) {
        std::vector<int> e(marks_, 0);
        ++e[i];
        ++e[j];
        exponents_.push_back(e);
      }
    }
  }
  width_ = static_cast<int>(exponents_.size());
  std::map<std::vector<int>, int> slot;
  total_degree_.assign(width_, 0);
  for (int s = 0; s < width_; ++s) {
    slot[exponents_[s]] = s;
    for (int e : exponents_[s]) total_degree_[s] += e;
  }
  pairs_.assign(width_, {});
  for (int x = 0; x < width_; ++x) {
    for (int y = 0; y < width_; ++y) {
      if (total_degree_[x] + total_degree_[y] > degree_) continue;
      std::vector<int> e = exponents_[x];
      for (int i = 0; i < marks_; ++i) e[i] += exponents_[y][i];
      pairs_[x].push_back({y, slot.at(e)});
    }
  }
  raise_.assign(marks_, std::vector<int>(width_ * (degree_ + 1), -1));
  for (int m = 0; m < marks_; ++m) {
    for (int x = 0; x < width_; ++x) {
      for (int j = 0; j + total_degree_[x] <= degree_; ++j) {
        std::vector<int> e = exponents_[x];
        e[m] += j;
        raise_[m][x * (degree_ + 1) + j] = slot.at(e);
      }
    }
  }
}

int MarkRing::LinearSlot(int i) const {
  if (mode_ != MarkMode::kJet || i < 0 || i >= marks_) return -1;
  return 1 + i;
}

int MarkRing::QuadraticSlot(int i, int j) const {
  if (mode_ != MarkMode::kJet || degree_ < 2) return -1;
  if (i > j) std::swap(i, j);
  if (i < 0 || j >= marks_) return -1;
  // Slots after the linear block enumerate (i, j) with i <= j row by row.
  int s = 1 + marks_;
  for (int a = 0; a < i; ++a) s += marks_ - a;
  return s + (j - i);
}

void MarkRing::MulAdd(mpz_class* acc, const mpz_class* a,
                      const mpz_class* b) const {
  if (mode_ == MarkMode::kPolynomial) {
    for (int x = 0; x <= degree_; ++x) {
      if (sgn(a[x]) == 0) continue;
      for (int y = 0; x + y <= degree_; ++y) {
        mpz_addmul(acc[x + y].get_mpz_t(), a[x].get_mpz_t(), b[y].get_mpz_t());
      }
    }
    return;
  }
  for (int x = 0; x < width_; ++x) {
    if (sgn(a[x]) == 0) continue;
    for (const auto& [y, z] : pairs_[x]) {
      mpz_addmul(acc[z].get_mpz_t(), a[x].get_mpz_t(), b[y].get_mpz_t());
    }
  }
}

void MarkRing::ScaledAdd(mpz_class* acc, const mpz_class* a,
                         const mpz_class& s) const {
  for (int x = 0; x < width_; ++x) {
    mpz_addmul(acc[x].get_mpz_t(), a[x].get_mpz_t(), s.get_mpz_t());
  }
}

void MarkRing::MarkMulAdd(mpz_class* acc, const mpz_class* a, int mark,
                          std::uint64_t k, const mpz_class& s) const {
  if (mark < 0 || mode_ == MarkMode::kUnmarked) {
    ScaledAdd(acc, a, s);
    return;
  }
  if (mode_ == MarkMode::kPolynomial) {
    for (std::uint64_t x = 0; x + k <= static_cast<std::uint64_t>(degree_);
         ++x) {
      mpz_addmul(acc[x + k].get_mpz_t(), a[x].get_mpz_t(), s.get_mpz_t());
    }
    return;
  }
  // (1 + e)^k = sum_j C(k, j) e^j
  mpz_class scaled[3];
  for (int j = 0; j <= degree_; ++j) {
    mpz_class binom;
    mpz_bin_ui(binom.get_mpz_t(), mpz_class(k).get_mpz_t(), j);
    scaled[j] = binom * s;
  }
  const std::vector<int>& raise = raise_[mark];
  for (int x = 0; x < width_; ++x) {
    if (sgn(a[x]) == 0) continue;
    for (int j = 0; j + total_degree_[x] <= degree_; ++j) {
      mpz_addmul(acc[raise[x * (degree_ + 1) + j]].get_mpz_t(),
                 a[x].get_mpz_t(), scaled[j].get_mpz_t());
    }
  }
}

void MarkRing::AddMark(mpz_class* acc, int mark, std::uint64_t k,
                       const mpz_class& s) const {
  if (mark < 0 || mode_ == MarkMode::kUnmarked) {
    acc[0] += s;
    return;
  }
  if (mode_ == MarkMode::kPolynomial) {
    if (k <= static_cast<std::uint64_t>(degree_)) acc[k] += s;
    return;
  }
  for (int j = 0; j <= degree_; ++j) {
    mpz_class binom;
    mpz_bin_ui(binom.get_mpz_t(), mpz_class(k).get_mpz_t(), j);
    acc[raise_[mark][j]] += binom * s;
  }
}

mpz_class MarkRing::Erase(const mpz_class* a) const {
  if (mode_ == MarkMode::kPolynomial) {
    mpz_class sum;
    for (int x = 0; x <= degree_; ++x) sum += a[x];
    return sum;
  }
  return a[0];
}

JetSeries::JetSeries(std::shared_ptr<const MarkRing> ring, int order)
    : ring_(std::move(ring)),
      order_(order),
      width_(ring_->width()),
      data_(static_cast<std::size_t>(order + 1) * width_) {}

Series JetSeries::Erase() const {
  Series s(order_);
  for (int n = 0; n <= order_; ++n) s[n] = ring_->Erase(at(n));
  return s;
}

JetSeries JetSeries::Lift(std::shared_ptr<const MarkRing> ring,
                          const Series& s) {
  JetSeries j(std::move(ring), s.order());
  for (int n = 0; n <= s.order(); ++n) j.at(n)[0] = s[n];
  return j;
}

std::vector<mpz_class> JetSeries::Distribution(int n) const {
  if (ring_->mode() != MarkMode::kPolynomial) {
    throw std::logic_error("distributions need polynomial marks");
  }
  return std::vector<mpz_class>(at(n), at(n) + width_);
}

JetSeries::Moments JetSeries::MomentsAt(int n, int mark) const {
  const mpz_class* c = at(n);
  Moments m;
  if (ring_->mode() == MarkMode::kPolynomial) {
    mpz_class total, first, second;
    for (int k = 0; k < width_; ++k) {
      total += c[k];
      first += k * c[k];
      second += mpz_class(k) * k * c[k];
    }
    if (total == 0) throw std::domain_error("no terms of this size");
    m.mean = mpq_class(first, total);
    m.mean.canonicalize();
    mpq_class ex2(second, total);
    ex2.canonicalize();
    m.variance = ex2 - m.mean * m.mean;
    return m;
  }
  if (ring_->mode() != MarkMode::kJet) {
    throw std::logic_error("moments need marks");
  }
  if (c[0] == 0) throw std::domain_error("no terms of this size");
  m.mean = mpq_class(c[ring_->LinearSlot(mark)], c[0]);
  m.mean.canonicalize();
  const int q = ring_->QuadraticSlot(mark, mark);
  if (q >= 0) {
    mpq_class falling(2 * c[q], c[0]);
    falling.canonicalize();
    m.variance = falling + m.mean - m.mean * m.mean;
  }
  return m;
}

mpq_class JetSeries::CovarianceAt(int n, int i, int j) const {
  if (i == j) return MomentsAt(n, i).variance;
  const mpz_class* c = at(n);
  const int q = ring_->QuadraticSlot(i, j);
  if (q < 0) throw std::logic_error("covariance needs degree-2 jets");
  if (c[0] == 0) throw std::domain_error("no terms of this size");
  mpq_class cross(c[q], c[0]);
  cross.canonicalize();
  return cross - MomentsAt(n, i).mean * MomentsAt(n, j).mean;
}

}  // namespace census
