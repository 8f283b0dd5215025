// Copyright 2026 The rsasm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Unranked, ordered, labelled trees with values on leaves.
//
// Node identifiers are dense indices allocated in preorder by every
// constructor, so they are deterministic but meaningful only within one tree.
// Two trees are equal iff they are isomorphic as ordered labelled trees with
// leaf values; node identifiers never take part in comparison.

#ifndef RSASM_TREE_H_
#define RSASM_TREE_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rsasm/value.h"

namespace rsasm {

using NodeId = std::uint32_t;

// Label of the unique hole leaf of a context.
inline constexpr char kHoleLabel[] = "\xCE\xBE";  // ξ

namespace internal {
struct TreeNode {
  std::string label;
  Value value;
  std::optional<NodeId> parent;
  std::vector<NodeId> children;
};
}  // namespace internal

class Tree {
 public:
  // A single node; `value` is dropped when undef.
  static Tree Leaf(std::string label, Value value = Value());
  // label_hedge(label, children).
  static Tree Node(std::string label, std::span<const Tree> children);
  static Tree Node(std::string label, std::initializer_list<Tree> children) {
    return Node(std::move(label),
                std::span<const Tree>(children.begin(), children.size()));
  }
  // The trivial context.
  static Tree Hole() { return Leaf(kHoleLabel); }

  NodeId root() const { return 0; }
  std::size_t size() const { return nodes_.size(); }

  const std::string& label(NodeId o) const { return node(o).label; }
  const Value& value(NodeId o) const { return node(o).value; }
  std::optional<NodeId> parent(NodeId o) const;
  std::span<const NodeId> children(NodeId o) const { return node(o).children; }
  bool is_leaf(NodeId o) const { return node(o).children.empty(); }
  bool contains(NodeId o) const { return o < nodes_.size(); }
  // Position of `o` among its parent's children; 0 for the root.
  std::uint32_t sibling_index(NodeId o) const;
  std::uint32_t depth(NodeId o) const;
  // True iff `ancestor` is a strict ancestor of `o`.
  bool is_strict_ancestor(NodeId ancestor, NodeId o) const;

  Path PathOf(NodeId o) const;
  // Throws TreeError if the path leaves the tree.
  NodeId At(const Path& path) const;
  std::optional<NodeId> Find(const Path& path) const;

  // Nodes labelled with the hole label.
  std::vector<NodeId> Holes() const;

  // Checks the structural invariants; throws TreeError on violation.
  void Validate() const;

  friend std::strong_ordering operator<=>(const Tree& a, const Tree& b);
  friend bool operator==(const Tree& a, const Tree& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

  // Incremental preorder construction.
  class Builder {
   public:
    // Starts a new node as the last child of `parent` (or the root when
    // `parent` is empty). Nodes must be opened in preorder.
    NodeId Open(std::string label, Value value,
                std::optional<NodeId> parent);
    // Copies `src`'s subtree at `at` below `parent`.
    NodeId Copy(const Tree& src, NodeId at, std::optional<NodeId> parent);
    Tree Finish() &&;

   private:
    std::vector<internal::TreeNode> nodes_;
  };

 private:
  const internal::TreeNode& node(NodeId o) const;

  std::vector<internal::TreeNode> nodes_;
};

using Hedge = std::vector<Tree>;

// A tree with exactly one leaf labelled by the hole label, carrying undef.
class Context {
 public:
  // Throws TreeError unless `tree` has exactly one hole leaf.
  static Context FromTree(Tree tree);
  static Context Trivial() { return FromTree(Tree::Hole()); }

  const Tree& tree() const { return tree_; }
  NodeId hole() const { return hole_; }
  bool is_trivial() const { return tree_.size() == 1; }

  friend bool operator==(const Context& a, const Context& b) {
    return a.tree_ == b.tree_;
  }

 private:
  Context(Tree tree, NodeId hole) : tree_(std::move(tree)), hole_(hole) {}

  Tree tree_;
  NodeId hole_;
};

// Compact text form, e.g. `self<signature<...>, rule<...>>`; leaf values in
// parentheses.
std::string ToString(const Tree& t);

}  // namespace rsasm

#endif  // RSASM_TREE_H_
