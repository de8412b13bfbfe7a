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


#ifndef CENSUS_TOOLS_COMMANDS_H_
#define CENSUS_TOOLS_COMMANDS_H_

#include <cstdint>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace census::cli {

// Bad flag values or combinations; exit code 2.
class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input term that failed to parse; exit code 4.
class InputError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string family = "plain";
  std::string param = "none";
  int order = 10;
  std::optional<int> depth;
  int h = 30;
  std::uint64_t window_lo = 20000;
  std::uint64_t window_hi = 50000;
  std::uint64_t count = 1;
  std::optional<std::uint64_t> seed;
  int workers = 1;
  std::string format = "csv";
  bool emit_terms = false;
  bool entropy = false;
  int cap = 30;
  std::optional<double> z;
  std::uint64_t max_attempts = 1000000;
  std::string input;

  nlohmann::json ToJson() const;
};

std::string RunCount(const Options& o);
std::string RunDist(const Options& o);
std::string RunMoments(const Options& o);
std::string RunConstants(const Options& o);
// Resolves the seed (drawing one under --entropy) into `o.seed`.
std::string RunSample(Options& o);
std::string RunMeasure(const Options& o, std::istream& in);

}  // namespace census::cli

#endif  // CENSUS_TOOLS_COMMANDS_H_
