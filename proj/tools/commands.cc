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


#include "commands.h"

#include <cinttypes>
#include <cstdio>
#include <memory>
#include <random>
#include <sstream>
#include <string_view>
#include <vector>

#include "census/asymptotics.h"
#include "census/sampler.h"
#include "census/statistics.h"
#include "census/systems.h"
#include "census/term_io.h"

namespace census::cli {
namespace {

using RingPtr = std::shared_ptr<const MarkRing>;

std::string Real17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

bool Json(const Options& o) {
  if (o.format == "json") return true;
  if (o.format == "csv") return false;
  throw UsageError("--format must be csv or json");
}

// Counting families: the sampler families plus normal_forms and neutral.
struct CountFamily {
  std::string name;
  std::optional<Family> family;
};

CountFamily ParseCountFamily(const Options& o) {
  if (o.family == "normal_forms" || o.family == "neutral") {
    return {o.family, std::nullopt};
  }
  try {
    const Family f = ParseSamplerFamily(o.family, o.h);
    return {FamilyName(f), f};
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int LadderDepth(const Options& o, int openness) {
  const int depth = o.depth.value_or(std::max(o.order, 1));
  if (depth <= openness) {
    throw UsageError("--depth must exceed the openness bound");
  }
  return depth;
}

Series CountSeries(const Options& o, const CountFamily& f) {
  if (o.order < 1) throw UsageError("--order must be positive");
  if (f.name == "normal_forms") return SolveNormalForms(o.order).normal;
  if (f.name == "neutral") return SolveNormalForms(o.order).neutral;
  switch (f.family->kind) {
    case FamilyKind::kPlain:
      return SolvePlain(o.order);
    case FamilyKind::kClosed:
    case FamilyKind::kMOpen: {
      const int m = f.family->parameter;
      return SolveOpenLadder(o.order, LadderDepth(o, m))[m];
    }
    case FamilyKind::kHShallow:
      return SolveHShallow(o.order, f.family->parameter);
  }
  throw UsageError("unknown family");
}

Parameter MarkedParameter(const Options& o) {
  Parameter p;
  try {
    p = ParseParameter(o.param);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (p == Parameter::kNone || p == Parameter::kJoint4) {
    throw UsageError("--param must name a single parameter");
  }
  return p;
}

JetSeries MarkedSeries(const Options& o, Parameter p, RingPtr ring) {
  const CountFamily f = ParseCountFamily(o);
  if (!f.family.has_value() || f.family->kind == FamilyKind::kHShallow) {
    throw UsageError("family " + f.name +
                     " has no marked system; use plain, closed or m_open:K");
  }
  if (f.family->kind == FamilyKind::kPlain) {
    return SolveMarkedPlain(p, o.order, ring);
  }
  const int m = f.family->parameter;
  TruncatedSystem sys = SolveTruncatedClosed(o.order, LadderDepth(o, m), p, ring);
  return std::move(sys.levels[m]);
}

}  // namespace

nlohmann::json Options::ToJson() const {
  nlohmann::json j = {{"family", family},   {"param", param},
                      {"order", order},     {"h", h},
                      {"window", {window_lo, window_hi}},
                      {"count", count},     {"workers", workers},
                      {"format", format},   {"emit_terms", emit_terms},
                      {"entropy", entropy}, {"cap", cap},
                      {"max_attempts", max_attempts}};
  j["depth"] = depth.has_value() ? nlohmann::json(*depth) : nullptr;
  j["seed"] = seed.has_value() ? nlohmann::json(*seed) : nullptr;
  j["z"] = z.has_value() ? nlohmann::json(*z) : nullptr;
  j["input"] = input.empty() ? nlohmann::json(nullptr) : nlohmann::json(input);
  return j;
}

std::string RunCount(const Options& o) {
  const bool json = Json(o);
  const CountFamily f = ParseCountFamily(o);
  const Series s = CountSeries(o, f);
  if (json) {
    nlohmann::json rows = nlohmann::json::array();
    for (int n = 1; n <= o.order; ++n) {
      if (sgn(s[n]) != 0) rows.push_back({{"n", n}, {"count", s[n].get_str()}});
    }
    return nlohmann::json{{"family", f.name}, {"order", o.order}, {"rows", rows}}
               .dump() +
           "\n";
  }
  std::string out = "n,count\n";
  for (int n = 1; n <= o.order; ++n) {
    if (sgn(s[n]) != 0) out += std::to_string(n) + "," + s[n].get_str() + "\n";
  }
  return out;
}

std::string RunDist(const Options& o) {
  const bool json = Json(o);
  const Parameter p = MarkedParameter(o);
  if (o.order < 1) throw UsageError("--order must be positive");
  if (o.order > o.cap) {
    throw UsageError("n = " + std::to_string(o.order) +
                     " exceeds the exact-distribution cap " +
                     std::to_string(o.cap) + " (raise --cap)");
  }
  const RingPtr ring =
      std::make_shared<const MarkRing>(MarkRing::Polynomial(o.order));
  const JetSeries s = MarkedSeries(o, p, ring);
  const std::vector<mpz_class> d = s.Distribution(o.order);
  mpz_class total = 0;
  for (const mpz_class& x : d) total += x;
  nlohmann::json rows = nlohmann::json::array();
  std::string csv = "value,count,probability\n";
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (sgn(d[k]) == 0) continue;
    mpq_class prob(d[k], total);
    prob.canonicalize();
    csv += std::to_string(k) + "," + d[k].get_str() + "," + prob.get_str() +
           "\n";
    rows.push_back({{"value", k},
                    {"count", d[k].get_str()},
                    {"probability", prob.get_str()},
                    {"probability_value", prob.get_d()}});
  }
  if (!json) return csv;
  return nlohmann::json{{"parameter", ParameterName(p)},
                        {"family", ParseCountFamily(o).name},
                        {"n", o.order},
                        {"total", total.get_str()},
                        {"rows", rows}}
             .dump() +
         "\n";
}

std::string RunMoments(const Options& o) {
  const bool json = Json(o);
  const Parameter p = MarkedParameter(o);
  if (o.order < 1) throw UsageError("--order must be positive");
  const RingPtr ring = std::make_shared<const MarkRing>(MarkRing::Jet(1, 2));
  const JetSeries s = MarkedSeries(o, p, ring);
  nlohmann::json rows = nlohmann::json::array();
  std::string csv = "n,mean,variance\n";
  for (int n = 1; n <= o.order; ++n) {
    if (sgn(s.at(n)[0]) == 0) continue;
    const JetSeries::Moments m = s.MomentsAt(n, 0);
    const double mean = m.mean.get_d(), variance = m.variance.get_d();
    csv += std::to_string(n) + "," + Real17(mean) + "," + Real17(variance) + "\n";
    rows.push_back({{"n", n}, {"mean", mean}, {"variance", variance}});
  }
  if (!json) return csv;
  return nlohmann::json{{"parameter", ParameterName(p)},
                        {"family", ParseCountFamily(o).name},
                        {"rows", rows}}
             .dump() +
         "\n";
}

std::string RunConstants(const Options& o) {
  const bool json = Json(o);
  const int depth = o.depth.value_or(64);
  if (depth < 1) throw UsageError("--depth must be positive");
  const AsymptoticTable t = ComputeAsymptoticTable(depth);
  if (!json) {
    std::string csv = "name,value,tolerance\n";
    for (const auto& [name, c] : t.derived) {
      csv += name + "," + Real17(static_cast<double>(c.value)) + "," +
             Real17(static_cast<double>(c.tolerance)) + "\n";
    }
    return csv;
  }
  nlohmann::json constants = nlohmann::json::object();
  for (const auto& [name, c] : t.derived) {
    constants[name] = {{"value", static_cast<double>(c.value)},
                       {"tolerance", static_cast<double>(c.tolerance)}};
  }
  nlohmann::json a = nlohmann::json::array(), b = nlohmann::json::array();
  for (Real x : t.ladder.a) a.push_back(static_cast<double>(x));
  for (Real x : t.ladder.b) b.push_back(static_cast<double>(x));
  return nlohmann::json{{"constants", constants},
                        {"ladder", {{"depth", depth}, {"a", a}, {"b", b}}}}
             .dump() +
         "\n";
}

namespace {

const char kMetricsHeader[] =
    "size,variables,abstractions,applications,successors,redexes,"
    "head_abstractions,openness,lo_cost,free_variable_occurrences,"
    "open_subterm_fraction,binding_abstraction_fraction,"
    "max_bound_per_abstraction";

std::string MetricsRow(const ParameterReport& r) {
  const TermMetrics& m = r.metrics;
  std::ostringstream row;
  row << m.size << ',' << m.variables << ',' << m.abstractions << ','
      << m.applications << ',' << m.successors << ',' << m.redexes << ','
      << m.head_abstractions << ',' << m.openness << ',' << r.lo_cost << ','
      << r.free_variable_occurrences << ','
      << Real17(r.open_subterm_fraction.value()) << ',';
  if (r.binding_abstraction_fraction.has_value()) {
    row << Real17(r.binding_abstraction_fraction->value());
  } else {
    row << "undefined";
  }
  row << ',' << r.max_bound_per_abstraction;
  return row.str();
}

}  // namespace

std::string RunSample(Options& o) {
  const bool json = Json(o);
  if (!o.seed.has_value()) {
    if (!o.entropy) {
      throw UsageError("sample needs --seed (or --entropy for a fresh seed)");
    }
    std::random_device device;
    o.seed = (std::uint64_t{device()} << 32) | device();
  }
  if (o.count < 1) throw UsageError("--count must be positive");
  if (o.workers < 1) throw UsageError("--workers must be positive");
  if (o.window_lo > o.window_hi) throw UsageError("--window needs LO <= HI");
  SamplerConfig config;
  try {
    config.family = ParseSamplerFamily(o.family, o.h);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  config.z = o.z;
  config.lo = o.window_lo;
  config.hi = o.window_hi;
  config.seed = *o.seed;
  config.max_attempts = o.max_attempts;
  config.ladder_depth = o.depth.value_or(64);
  const std::vector<BatchItem> batch =
      SampleBatch(config, o.count, o.workers, o.emit_terms);
  std::string out;
  if (!json) {
    out = std::string("worker,index,seed,attempt,") + kMetricsHeader + "\n";
  }
  for (const BatchItem& item : batch) {
    const std::uint64_t seed = WorkerSeed(*o.seed, item.worker);
    if (!json) {
      out += std::to_string(item.worker) + "," + std::to_string(item.index) +
             "," + std::to_string(seed) + "," + std::to_string(item.attempts) +
             "," + MetricsRow(item.report) + "\n";
      continue;
    }
    nlohmann::json line = {{"size", item.report.metrics.size},
                           {"seed", seed},
                           {"worker", item.worker},
                           {"index", item.index},
                           {"attempt", item.attempts}};
    if (item.term.has_value()) line["term"] = Print(*item.term);
    line["report"] = ReportToJson(item.report);
    out += line.dump() + "\n";
  }
  return out;
}

std::string RunMeasure(const Options& o, std::istream& in) {
  const bool json = Json(o);
  std::string out = json ? "" : std::string("line,") + kMetricsHeader + "\n";
  std::string text;
  for (std::uint64_t line = 1; std::getline(in, text); ++line) {
    const std::size_t first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos || text[first] == '#') continue;
    auto read = [&]() {
      try {
        if (text[first] == '{') return FromJson(nlohmann::json::parse(text));
        return Parse(text);
      } catch (const ParseError& e) {
        throw InputError("line " + std::to_string(line) + ": " + e.what());
      } catch (const nlohmann::json::exception& e) {
        throw InputError("line " + std::to_string(line) + ": " + e.what());
      }
    };
    const ParameterReport r = Measure(read());
    if (json) {
      out += nlohmann::json{{"line", line}, {"report", ReportToJson(r)}}.dump() +
             "\n";
    } else {
      out += std::to_string(line) + "," + MetricsRow(r) + "\n";
    }
  }
  return out;
}

}  // namespace census::cli
