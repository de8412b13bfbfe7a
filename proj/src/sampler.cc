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

#include "census/sampler.h"

#include <cmath>
#include <exception>
#include <thread>

#include "census/asymptotics.h"

namespace census {
namespace {

int ParseSuffix(std::string_view text, std::size_t colon) {
  const std::string digits(text.substr(colon + 1));
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos ||
      digits.size() > 6) {
    throw std::invalid_argument("bad family parameter in '" +
                                std::string(text) + "'");
  }
  return std::stoi(digits);
}

// Index value below `limit` with P(j) proportional to z^j.
std::uint64_t DrawIndex(std::mt19937_64& rng, double z, std::uint64_t limit) {
  const double u = Uniform(rng);
  if (limit == BranchingTables::kUnbounded) {
    return static_cast<std::uint64_t>(std::floor(std::log1p(-u) / std::log(z)));
  }
  const double mass = -std::expm1(static_cast<double>(limit) * std::log(z));
  const auto j = static_cast<std::uint64_t>(
      std::floor(std::log1p(-u * mass) / std::log(z)));
  return j < limit ? j : limit - 1;
}

void CheckState(const StateTable& s, int state) {
  const double sum = s.p_abs + s.p_app + s.p_index;
  if (!(std::fabs(sum - 1) <= 1e-12) || s.p_abs < 0 || s.p_app < 0 ||
      s.p_index < 0) {
    throw CalibrationError("probabilities of state " + std::to_string(state) +
                           " sum to " + std::to_string(sum));
  }
}

}  // namespace

Family ParseSamplerFamily(std::string_view text, int default_h) {
  if (text == "plain") return {FamilyKind::kPlain, 0};
  if (text == "closed") return {FamilyKind::kClosed, 0};
  if (text == "h_shallow") return {FamilyKind::kHShallow, default_h};
  const std::size_t colon = text.find(':');
  if (colon != std::string_view::npos) {
    const std::string_view head = text.substr(0, colon);
    if (head == "m_open") return {FamilyKind::kMOpen, ParseSuffix(text, colon)};
    if (head == "h_shallow") {
      return {FamilyKind::kHShallow, ParseSuffix(text, colon)};
    }
  }
  throw std::invalid_argument("unknown sampler family '" + std::string(text) +
                              "'");
}

std::string FamilyName(const Family& f) {
  switch (f.kind) {
    case FamilyKind::kPlain:
      return "plain";
    case FamilyKind::kClosed:
      return "closed";
    case FamilyKind::kMOpen:
      return "m_open:" + std::to_string(f.parameter);
    case FamilyKind::kHShallow:
      return "h_shallow:" + std::to_string(f.parameter);
  }
  return "";
}

std::uint64_t BranchingTables::IndexLimit(std::uint64_t budget) const {
  if (!bounded_) return kUnbounded;
  if (shallow_limit_ > 0 && budget > shallow_limit_) return shallow_limit_;
  return budget;
}

BranchingTables Calibrate(const SamplerConfig& config) {
  if (config.lo > config.hi) throw CalibrationError("empty size window");
  BranchingTables t;
  const Family& f = config.family;
  const Real rho = ComputeRho();
  Real singularity = rho;
  if (f.kind == FamilyKind::kHShallow) {
    singularity = HShallowSingularity(f.parameter);
  }
  const Real z = config.z ? static_cast<Real>(*config.z) : singularity;
  if (!(z > 0) || z > singularity * (1 + 1e-12L)) {
    throw CalibrationError("z must lie in (0, singularity]");
  }
  t.z_ = static_cast<double>(z);

  // P(index) at budget m is sum_{j<m} z^{j+1} / L_m.
  auto index_mass = [z](Real limit, Real l) {
    return z * (1 - std::pow(z, limit)) / ((1 - z) * l);
  };

  switch (f.kind) {
    case FamilyKind::kPlain: {
      const Real l = PlainValue(z);
      t.states_.push_back({static_cast<double>(z), static_cast<double>(z * l),
                           static_cast<double>(z / ((1 - z) * l))});
      break;
    }
    case FamilyKind::kClosed:
    case FamilyKind::kMOpen: {
      t.bounded_ = true;
      t.start_ = f.kind == FamilyKind::kClosed ? 0 : f.parameter;
      const int depth = std::max(config.ladder_depth, t.start_ + 1);
      const std::vector<Real> l = OpenLadderValues(depth, z);
      for (int m = 0; m < depth; ++m) {
        t.states_.push_back({static_cast<double>(z * l[m + 1] / l[m]),
                             static_cast<double>(z * l[m]),
                             static_cast<double>(index_mass(m, l[m]))});
      }
      // Deep states use the limit values; the index mass is the remainder,
      // which differs from the exact one by a term of order z^depth.
      const Real lim = l[depth];
      t.states_.push_back({static_cast<double>(z),
                           static_cast<double>(z * lim),
                           static_cast<double>(1 - z - z * lim)});
      break;
    }
    case FamilyKind::kHShallow: {
      t.bounded_ = true;
      const int h = f.parameter;
      t.shallow_limit_ = static_cast<std::uint64_t>(h) + 1;
      const std::vector<Real> l = HShallowValues(h, z);
      for (int m = 0; m <= h; ++m) {
        t.states_.push_back({static_cast<double>(z * l[m + 1] / l[m]),
                             static_cast<double>(z * l[m]),
                             static_cast<double>(index_mass(m, l[m]))});
      }
      const Real top = l[h + 1];
      t.states_.push_back({static_cast<double>(z),
                           static_cast<double>(z * top),
                           static_cast<double>(index_mass(h + 1, top))});
      break;
    }
  }
  for (std::size_t s = 0; s < t.states_.size(); ++s) {
    CheckState(t.states_[s], static_cast<int>(s));
  }
  return t;
}

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t WorkerSeed(std::uint64_t seed, std::uint64_t worker) {
  return SplitMix64(seed + (worker + 1) * 0x9E3779B97F4A7C15ULL);
}

Sampler::Sampler(const SamplerConfig& config)
    : config_(config), tables_(Calibrate(config)) {}

Sampler::Sampler(const SamplerConfig& config, BranchingTables tables)
    : config_(config), tables_(std::move(tables)) {}

std::optional<Term> Sampler::TryOnce(std::mt19937_64& rng,
                                     std::uint64_t hi) const {
  TermBuilder builder;
  // Pending subterms, each tagged with its budget; the left child of an
  // application is generated first.
  std::vector<std::uint64_t> pending = {
      static_cast<std::uint64_t>(tables_.start_state())};
  std::uint64_t size = 0;
  const double z = tables_.z();
  while (!pending.empty()) {
    const std::uint64_t budget = pending.back();
    pending.pop_back();
    const StateTable& s = tables_.state(budget);
    const double u = Uniform(rng);
    if (u < s.p_abs) {
      builder.OpenAbs();
      ++size;
      pending.push_back(budget + 1);
    } else if (u < s.p_abs + s.p_app) {
      builder.OpenApp();
      ++size;
      pending.push_back(budget);
      pending.push_back(budget);
    } else {
      const std::uint64_t limit = tables_.IndexLimit(budget);
      if (limit == 0) {
        // Rounding left a sliver of index mass where none exists.
        pending.push_back(budget);
        continue;
      }
      const std::uint64_t j = DrawIndex(rng, z, limit);
      if (j > 0xFFFFFFFFULL) return std::nullopt;
      builder.AddIndex(static_cast<IndexValue>(j));
      size += j + 1;
    }
    if (size > hi) return std::nullopt;
  }
  return builder.Finish();
}

Draw Sampler::Sample(std::mt19937_64& rng) const {
  for (std::uint64_t attempt = 1; attempt <= config_.max_attempts; ++attempt) {
    std::optional<Term> t = TryOnce(rng, config_.hi);
    if (t && t->Size() >= config_.lo) return {std::move(*t), attempt};
  }
  throw SamplingError("no sample in [" + std::to_string(config_.lo) + ", " +
                      std::to_string(config_.hi) + "] after " +
                      std::to_string(config_.max_attempts) + " attempts");
}

std::vector<BatchItem> SampleBatch(const SamplerConfig& config,
                                   std::uint64_t count, int workers,
                                   bool keep_terms) {
  if (workers < 1) throw std::invalid_argument("workers must be positive");
  const Sampler sampler(config);
  std::vector<std::vector<BatchItem>> shares(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto run = [&](int w) {
    try {
      const std::uint64_t n = count / workers + (static_cast<std::uint64_t>(w) <
                                                 count % workers);
      std::mt19937_64 rng(WorkerSeed(config.seed, w));
      for (std::uint64_t i = 0; i < n; ++i) {
        Draw d = sampler.Sample(rng);
        BatchItem item;
        item.worker = w;
        item.index = i;
        item.attempts = d.attempts;
        item.report = Measure(d.term);
        if (keep_terms) item.term = std::move(d.term);
        shares[w].push_back(std::move(item));
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  std::vector<std::thread> threads;
  for (int w = 1; w < workers; ++w) threads.emplace_back(run, w);
  run(0);
  for (std::thread& t : threads) t.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<BatchItem> out;
  out.reserve(count);
  for (auto& share : shares) {
    for (BatchItem& item : share) out.push_back(std::move(item));
  }
  return out;
}

}  // namespace census
