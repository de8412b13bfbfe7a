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

#ifndef CENSUS_TERM_H_
#define CENSUS_TERM_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace census {

using IndexValue = std::uint32_t;

enum class NodeKind : std::uint8_t { kIndex, kAbs, kApp };

// One node of a term stored in preorder. `end` is one past the last node of
// the subtree rooted here, so the right child of an application at p starts
// at nodes[p + 1].end.
struct Node {
  NodeKind kind;
  IndexValue value;  // index value; zero for abstractions and applications
  std::uint32_t end;

  bool operator==(const Node&) const = default;
};

// An immutable de Bruijn term. Every traversal in the library walks the flat
// preorder array, so arbitrarily deep terms never touch the call stack.
class Term {
 public:
  static Term Index(IndexValue value);
  static Term Abs(const Term& body);
  static Term App(const Term& left, const Term& right);

  std::span<const Node> nodes() const { return nodes_; }
  std::size_t node_count() const { return nodes_.size(); }
  const Node& node(std::size_t p) const { return nodes_[p]; }
  NodeKind kind(std::size_t p) const { return nodes_[p].kind; }

  std::size_t Left(std::size_t p) const { return p + 1; }
  std::size_t Right(std::size_t p) const { return nodes_[p + 1].end; }
  std::size_t Body(std::size_t p) const { return p + 1; }

  // Natural size: every zero, successor, abstraction and application is one
  // atom.
  std::uint64_t Size() const;

  bool operator==(const Term&) const = default;

 private:
  friend class TermBuilder;
  explicit Term(std::vector<Node> nodes) : nodes_(std::move(nodes)) {}

  std::vector<Node> nodes_;
};

// Assembles a term from a preorder stream of constructors.
class TermBuilder {
 public:
  void AddIndex(IndexValue value);
  void OpenAbs();
  void OpenApp();

  bool complete() const { return !nodes_.empty() && open_.empty(); }
  std::size_t node_count() const { return nodes_.size(); }

  // Requires complete(). Leaves the builder empty.
  Term Finish();
  void Clear();

 private:
  void Close();

  struct Open {
    std::uint32_t position;
    std::uint8_t missing;
  };
  std::vector<Node> nodes_;
  std::vector<Open> open_;
};

}  // namespace census

#endif  // CENSUS_TERM_H_
