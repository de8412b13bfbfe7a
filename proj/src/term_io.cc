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

#include "census/term_io.h"

#include <cstdint>
#include <limits>
#include <vector>

namespace census {
namespace {

struct Task {
  enum Kind : std::uint8_t { kNode, kText } kind;
  std::uint32_t position;
  bool rightmost;
  bool parens;
  const char* text;
};

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

// Parser arena node. Applications are built left-associatively while
// scanning, so the preorder layout is only produced once the tree is known.
struct ArenaNode {
  NodeKind kind;
  IndexValue value;
  std::int32_t left;
  std::int32_t right;
};

struct Frame {
  enum Kind : std::uint8_t { kTop, kParen, kLambda } kind;
  std::int32_t acc;
  std::size_t offset;
};

}  // namespace

std::string Print(const Term& t) {
  std::string out;
  std::vector<Task> stack;
  stack.push_back({Task::kNode, 0, true, false, nullptr});
  while (!stack.empty()) {
    Task task = stack.back();
    stack.pop_back();
    if (task.kind == Task::kText) {
      out += task.text;
      continue;
    }
    const std::size_t p = task.position;
    bool rightmost = task.rightmost;
    if (task.parens) {
      out += '(';
      stack.push_back({Task::kText, 0, false, false, ")"});
      rightmost = true;
    }
    switch (t.kind(p)) {
      case NodeKind::kIndex:
        out += std::to_string(t.node(p).value);
        break;
      case NodeKind::kAbs:
        out += '\\';
        stack.push_back({Task::kNode, static_cast<std::uint32_t>(p + 1),
                         rightmost, false, nullptr});
        break;
      case NodeKind::kApp: {
        const std::size_t l = t.Left(p);
        const std::size_t r = t.Right(p);
        const NodeKind rk = t.kind(r);
        stack.push_back({Task::kNode, static_cast<std::uint32_t>(r), rightmost,
                         rk == NodeKind::kApp ||
                             (rk == NodeKind::kAbs && !rightmost),
                         nullptr});
        stack.push_back({Task::kText, 0, false, false, " "});
        stack.push_back({Task::kNode, static_cast<std::uint32_t>(l), false,
                         t.kind(l) == NodeKind::kAbs, nullptr});
        break;
      }
    }
  }
  return out;
}

Term Parse(std::string_view text) {
  std::vector<ArenaNode> arena;
  std::vector<Frame> frames;
  frames.push_back({Frame::kTop, -1, 0});

  auto append = [&](std::int32_t item) {
    Frame& f = frames.back();
    if (f.acc < 0) {
      f.acc = item;
    } else {
      arena.push_back({NodeKind::kApp, 0, f.acc, item});
      f.acc = static_cast<std::int32_t>(arena.size() - 1);
    }
  };
  // Closes lambda frames down to the innermost group.
  auto close_lambdas = [&](std::size_t at) {
    while (frames.back().kind == Frame::kLambda) {
      Frame f = frames.back();
      frames.pop_back();
      if (f.acc < 0) throw ParseError("abstraction without body", at);
      arena.push_back({NodeKind::kAbs, 0, f.acc, -1});
      append(static_cast<std::int32_t>(arena.size() - 1));
    }
  };

  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (IsSpace(c)) {
      ++i;
    } else if (c >= '0' && c <= '9') {
      const std::size_t start = i;
      std::uint64_t v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (v > std::numeric_limits<IndexValue>::max()) {
          throw ParseError("index overflow", start);
        }
        ++i;
      }
      arena.push_back({NodeKind::kIndex, static_cast<IndexValue>(v), -1, -1});
      append(static_cast<std::int32_t>(arena.size() - 1));
    } else if (c == '\\' || text.substr(i, 2) == "\xCE\xBB") {
      frames.push_back({Frame::kLambda, -1, i});
      i += c == '\\' ? 1 : 2;
    } else if (c == '(') {
      frames.push_back({Frame::kParen, -1, i});
      ++i;
    } else if (c == ')') {
      close_lambdas(i);
      if (frames.back().kind != Frame::kParen) {
        throw ParseError("unmatched ')'", i);
      }
      const std::int32_t inner = frames.back().acc;
      if (inner < 0) throw ParseError("empty parentheses", i);
      frames.pop_back();
      append(inner);
      ++i;
    } else if (c == '-') {
      throw ParseError("negative index", i);
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  close_lambdas(text.size());
  if (frames.back().kind != Frame::kTop) {
    throw ParseError("unclosed '('", frames.back().offset);
  }
  const std::int32_t root = frames.back().acc;
  if (root < 0) throw ParseError("empty term", text.size());

  TermBuilder builder;
  std::vector<std::int32_t> stack = {root};
  while (!stack.empty()) {
    const ArenaNode& n = arena[static_cast<std::size_t>(stack.back())];
    stack.pop_back();
    switch (n.kind) {
      case NodeKind::kIndex:
        builder.AddIndex(n.value);
        break;
      case NodeKind::kAbs:
        builder.OpenAbs();
        stack.push_back(n.left);
        break;
      case NodeKind::kApp:
        builder.OpenApp();
        stack.push_back(n.right);
        stack.push_back(n.left);
        break;
    }
  }
  return builder.Finish();
}

std::string ToJson(const Term& t) {
  std::string out;
  std::vector<Task> stack;
  stack.push_back({Task::kNode, 0, false, false, nullptr});
  while (!stack.empty()) {
    Task task = stack.back();
    stack.pop_back();
    if (task.kind == Task::kText) {
      out += task.text;
      continue;
    }
    const std::size_t p = task.position;
    switch (t.kind(p)) {
      case NodeKind::kIndex:
        out += "{\"idx\":" + std::to_string(t.node(p).value) + "}";
        break;
      case NodeKind::kAbs:
        out += "{\"abs\":";
        stack.push_back({Task::kText, 0, false, false, "}"});
        stack.push_back({Task::kNode, static_cast<std::uint32_t>(p + 1), false,
                         false, nullptr});
        break;
      case NodeKind::kApp:
        out += "{\"app\":[";
        stack.push_back({Task::kText, 0, false, false, "]}"});
        stack.push_back({Task::kNode, static_cast<std::uint32_t>(t.Right(p)),
                         false, false, nullptr});
        stack.push_back({Task::kText, 0, false, false, ","});
        stack.push_back({Task::kNode, static_cast<std::uint32_t>(t.Left(p)),
                         false, false, nullptr});
        break;
    }
  }
  return out;
}

Term FromJson(const nlohmann::json& j) {
  TermBuilder builder;
  std::vector<const nlohmann::json*> stack = {&j};
  while (!stack.empty()) {
    const nlohmann::json& n = *stack.back();
    stack.pop_back();
    if (!n.is_object() || n.size() != 1) {
      throw ParseError("term object must have exactly one key", 0);
    }
    if (auto it = n.find("idx"); it != n.end()) {
      if (!it->is_number_unsigned() ||
          it->get<std::uint64_t>() > std::numeric_limits<IndexValue>::max()) {
        throw ParseError("idx must be a non-negative 32-bit integer", 0);
      }
      builder.AddIndex(it->get<IndexValue>());
    } else if (auto it = n.find("abs"); it != n.end()) {
      builder.OpenAbs();
      stack.push_back(&*it);
    } else if (auto it = n.find("app"); it != n.end()) {
      if (!it->is_array() || it->size() != 2) {
        throw ParseError("app must be a two-element array", 0);
      }
      builder.OpenApp();
      stack.push_back(&(*it)[1]);
      stack.push_back(&(*it)[0]);
    } else {
      throw ParseError("unknown term key", 0);
    }
  }
  return builder.Finish();
}

}  // namespace census
