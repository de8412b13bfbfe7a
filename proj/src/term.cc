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

#include "census/term.h"

#include <stdexcept>

namespace census {

Term Term::Index(IndexValue value) {
  return Term({Node{NodeKind::kIndex, value, 1}});
}

Term Term::Abs(const Term& body) {
  std::vector<Node> nodes;
  nodes.reserve(body.nodes_.size() + 1);
  nodes.push_back(Node{NodeKind::kAbs, 0,
                       static_cast<std::uint32_t>(body.nodes_.size() + 1)});
  for (const Node& n : body.nodes_) {
    nodes.push_back(Node{n.kind, n.value, n.end + 1});
  }
  return Term(std::move(nodes));
}

Term Term::App(const Term& left, const Term& right) {
  const auto l = static_cast<std::uint32_t>(left.nodes_.size());
  const auto r = static_cast<std::uint32_t>(right.nodes_.size());
  std::vector<Node> nodes;
  nodes.reserve(l + r + 1);
  nodes.push_back(Node{NodeKind::kApp, 0, l + r + 1});
  for (const Node& n : left.nodes_) {
    nodes.push_back(Node{n.kind, n.value, n.end + 1});
  }
  for (const Node& n : right.nodes_) {
    nodes.push_back(Node{n.kind, n.value, n.end + l + 1});
  }
  return Term(std::move(nodes));
}

std::uint64_t Term::Size() const {
  std::uint64_t size = 0;
  for (const Node& n : nodes_) {
    size += n.kind == NodeKind::kIndex ? std::uint64_t{n.value} + 1 : 1;
  }
  return size;
}

void TermBuilder::AddIndex(IndexValue value) {
  if (complete()) throw std::logic_error("term already complete");
  const auto p = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back(Node{NodeKind::kIndex, value, p + 1});
  Close();
}

void TermBuilder::OpenAbs() {
  if (complete()) throw std::logic_error("term already complete");
  const auto p = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back(Node{NodeKind::kAbs, 0, 0});
  open_.push_back(Open{p, 1});
}

void TermBuilder::OpenApp() {
  if (complete()) throw std::logic_error("term already complete");
  const auto p = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back(Node{NodeKind::kApp, 0, 0});
  open_.push_back(Open{p, 2});
}

// A child just finished; seal every ancestor it completes.
void TermBuilder::Close() {
  const auto end = static_cast<std::uint32_t>(nodes_.size());
  while (!open_.empty()) {
    Open& top = open_.back();
    if (--top.missing > 0) return;
    nodes_[top.position].end = end;
    open_.pop_back();
  }
}

Term TermBuilder::Finish() {
  if (!complete()) throw std::logic_error("term is incomplete");
  Term t(std::move(nodes_));
  Clear();
  return t;
}

void TermBuilder::Clear() {
  nodes_.clear();
  open_.clear();
}

}  // namespace census
