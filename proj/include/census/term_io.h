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

#ifndef CENSUS_TERM_IO_H_
#define CENSUS_TERM_IO_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "census/term.h"
#include "json.hpp"

namespace census {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : std::runtime_error(message + " at byte " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Canonical text: `\` for λ (UTF-8 `λ` is accepted on input), juxtaposition
// for left-associative application, decimal indices, parentheses only where
// required. Example: `\\\2 0 (1 0)`.
std::string Print(const Term& t);
Term Parse(std::string_view text);

// {"abs": t} | {"app": [l, r]} | {"idx": n}
std::string ToJson(const Term& t);
Term FromJson(const nlohmann::json& j);

}  // namespace census

#endif  // CENSUS_TERM_IO_H_
