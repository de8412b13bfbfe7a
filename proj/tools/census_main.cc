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


// census: counting, exact distributions, limit constants, sampling and
// measurement of de Bruijn lambda-terms.
//
// Exit codes: 0 ok, 2 usage, 3 numeric or calibration failure, 4 parse
// failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "census/sampler.h"
#include "commands.h"
#include "manifest.h"

namespace {

using census::cli::Options;

enum ExitCode { kOk = 0, kUsage = 2, kNumeric = 3, kParse = 4 };

void AddFamily(CLI::App* sub, Options& o) {
  sub->set_help_flag("--help", "Print this help message and exit");
  sub->add_option("--family", o.family,
                  "plain, closed, m_open:K, h_shallow[:H], normal_forms, "
                  "neutral")
      ->capture_default_str();
  sub->add_option("--h", o.h, "shallowness bound for a bare h_shallow")
      ->capture_default_str();
  sub->add_option("--depth", o.depth, "ladder truncation depth");
}

void AddFormat(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  std::string out_path, manifest_path;
  std::vector<std::uint64_t> window;

  CLI::App app{"Combinatorics workbench for de Bruijn lambda-terms"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.add_option("--out", out_path, "data output file (default stdout)");
  app.add_option("--manifest", manifest_path,
                 "manifest file (default <out>.manifest.json, or stderr)");

  CLI::App* count = app.add_subcommand("count", "coefficients of a family");
  AddFamily(count, o);
  count->add_option("--order", o.order, "largest size")->capture_default_str();
  AddFormat(count, o);

  CLI::App* dist = app.add_subcommand("dist", "exact parameter distribution");
  AddFamily(dist, o);
  dist->add_option("--param", o.param, "marked parameter")->required();
  dist->add_option("--order", o.order, "term size n")->capture_default_str();
  dist->add_option("--cap", o.cap, "largest admissible n")
      ->capture_default_str();
  AddFormat(dist, o);

  CLI::App* moments = app.add_subcommand("moments", "exact means, variances");
  AddFamily(moments, o);
  moments->add_option("--param", o.param, "marked parameter")->required();
  moments->add_option("--order", o.order, "largest size")
      ->capture_default_str();
  AddFormat(moments, o);

  CLI::App* constants = app.add_subcommand("constants", "limit constants");
  constants->set_help_flag("--help", "Print this help message and exit");
  constants->add_option("--depth", o.depth, "ladder depth (default 64)");
  AddFormat(constants, o);

  CLI::App* sample = app.add_subcommand("sample", "Boltzmann sampling");
  AddFamily(sample, o);
  sample->add_option("--window", window, "size window LO HI")->expected(2);
  sample->add_option("--count", o.count, "accepted samples")
      ->capture_default_str();
  sample->add_option("--seed", o.seed, "64-bit seed");
  sample->add_flag("--entropy", o.entropy, "draw a fresh seed");
  sample->add_option("--workers", o.workers, "worker threads")
      ->capture_default_str();
  sample->add_option("--z", o.z, "evaluation point (default singularity)");
  sample->add_option("--max-attempts", o.max_attempts,
                     "rejection attempts per sample")
      ->capture_default_str();
  sample->add_flag("--emit-terms", o.emit_terms, "include terms");
  AddFormat(sample, o);

  CLI::App* measure = app.add_subcommand("measure", "measure input terms");
  measure->set_help_flag("--help", "Print this help message and exit");
  measure->add_option("--input", o.input, "term file (default stdin)");
  AddFormat(measure, o);

  o.format.clear();
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  if (!window.empty()) {
    o.window_lo = window[0];
    o.window_hi = window[1];
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  if (o.format.empty()) {
    o.format = chosen == count || chosen == dist || chosen == moments
                   ? "csv"
                   : "json";
  }
  const auto start = std::chrono::steady_clock::now();
  std::string data;
  try {
    if (command == "count") data = census::cli::RunCount(o);
    if (command == "dist") data = census::cli::RunDist(o);
    if (command == "moments") data = census::cli::RunMoments(o);
    if (command == "constants") data = census::cli::RunConstants(o);
    if (command == "sample") data = census::cli::RunSample(o);
    if (command == "measure") {
      if (o.input.empty()) {
        data = census::cli::RunMeasure(o, std::cin);
      } else {
        std::ifstream in(o.input);
        if (!in) {
          std::cerr << "census: cannot read " << o.input << "\n";
          return kUsage;
        }
        data = census::cli::RunMeasure(o, in);
      }
    }
  } catch (const census::cli::UsageError& e) {
    std::cerr << "census: " << e.what() << "\n";
    return kUsage;
  } catch (const census::cli::InputError& e) {
    std::cerr << "census: " << e.what() << "\n";
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "census: " << e.what() << "\n";
    return kNumeric;
  }
  const double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();

  if (out_path.empty() || out_path == "-") {
    std::cout << data << std::flush;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    out << data;
    if (!out) {
      std::cerr << "census: cannot write " << out_path << "\n";
      return kUsage;
    }
  }

  const nlohmann::json manifest = {
      {"command", command},
      {"argv", std::vector<std::string>(argv, argv + argc)},
      {"config", o.ToJson()},
      {"seed", o.seed.has_value() ? nlohmann::json(*o.seed) : nullptr},
      {"versions", census::cli::VersionInfo()},
      {"wall_clock_seconds", seconds},
      {"output",
       {{"path", out_path.empty() ? "-" : out_path},
        {"bytes", data.size()},
        {"sha256", census::cli::Sha256Hex(data)}}}};
  const std::string path =
      census::cli::ManifestPath(manifest_path, out_path);
  if (path.empty()) {
    std::cerr << manifest.dump() << "\n";
  } else {
    std::ofstream m(path);
    m << manifest.dump(2) << "\n";
    if (!m) {
      std::cerr << "census: cannot write " << path << "\n";
      return kUsage;
    }
  }
  return kOk;
}
