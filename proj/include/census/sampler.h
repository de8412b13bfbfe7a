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

#ifndef CENSUS_SAMPLER_H_
#define CENSUS_SAMPLER_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "census/statistics.h"
#include "census/term.h"

namespace census {

enum class FamilyKind { kPlain, kClosed, kMOpen, kHShallow };

struct Family {
  FamilyKind kind = FamilyKind::kPlain;
  int parameter = 0;  // m for m_open, h for h_shallow

  bool operator==(const Family&) const = default;
};

// "plain", "closed", "m_open:K", "h_shallow:H" (also "h_shallow" with
// `default_h`), "normal_forms", "neutral". The last two are counting-only
// families and are rejected here.
Family ParseSamplerFamily(std::string_view text, int default_h = 30);
std::string FamilyName(const Family& f);

class CalibrationError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};
class SamplingError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SamplerConfig {
  Family family;
  std::optional<double> z;  // defaults to the family singularity
  std::uint64_t lo = 20000;
  std::uint64_t hi = 50000;
  std::uint64_t seed = 0;
  std::uint64_t max_attempts = 1000000;
  int ladder_depth = 64;
};

// Branching probabilities for one state of the generator. The state of the
// ladder families is the number of λ's above the current node.
struct StateTable {
  double p_abs = 0;
  double p_app = 0;
  double p_index = 0;
};

class BranchingTables {
 public:
  double z() const { return z_; }
  int start_state() const { return start_; }
  // States at or above this one share its table.
  int saturated_state() const { return static_cast<int>(states_.size()) - 1; }
  const StateTable& state(std::uint64_t budget) const {
    return states_[budget < states_.size() ? budget : states_.size() - 1];
  }
  static constexpr std::uint64_t kUnbounded = ~std::uint64_t{0};
  // Index values drawn in state `budget` lie below this bound.
  std::uint64_t IndexLimit(std::uint64_t budget) const;
  bool bounded() const { return bounded_; }

 private:
  friend BranchingTables Calibrate(const SamplerConfig& config);
  double z_ = 0;
  int start_ = 0;
  bool bounded_ = false;              // index values limited by the budget
  std::uint64_t shallow_limit_ = 0;  // h + 1 for h-shallow, else 0
  std::vector<StateTable> states_;
};

// Throws CalibrationError when a state's probabilities fail to sum to 1.
BranchingTables Calibrate(const SamplerConfig& config);

// 53-bit uniform draw in [0, 1).
inline double Uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t SplitMix64(std::uint64_t x);
// Seed of worker i: SplitMix64(seed + (i + 1) * 0x9E3779B97F4A7C15).
std::uint64_t WorkerSeed(std::uint64_t seed, std::uint64_t worker);

struct Draw {
  Term term;
  std::uint64_t attempts;
};

class Sampler {
 public:
  explicit Sampler(const SamplerConfig& config);
  Sampler(const SamplerConfig& config, BranchingTables tables);

  const BranchingTables& tables() const { return tables_; }

  // One branching-process run. Returns nullopt when the atom count passes
  // `hi` (the run is abandoned there).
  std::optional<Term> TryOnce(std::mt19937_64& rng, std::uint64_t hi) const;
  // Rejection loop until the size falls in [lo, hi].
  Draw Sample(std::mt19937_64& rng) const;

 private:
  SamplerConfig config_;
  BranchingTables tables_;
};

struct BatchItem {
  std::uint64_t worker = 0;
  std::uint64_t index = 0;  // position within the worker's share
  std::uint64_t attempts = 0;
  std::optional<Term> term;
  ParameterReport report;
};

// Worker i draws count/workers samples (one more for i < count % workers)
// from the generator seeded with WorkerSeed(seed, i). Results come back in
// worker-then-index order.
std::vector<BatchItem> SampleBatch(const SamplerConfig& config,
                                   std::uint64_t count, int workers,
                                   bool keep_terms);

}  // namespace census

#endif  // CENSUS_SAMPLER_H_
