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

#include "rsasm/tree.h"

#include <algorithm>
#include <sstream>

#include "rsasm/error.h"

namespace rsasm {

Tree Tree::Leaf(std::string label, Value value) {
  Builder b;
  b.Open(std::move(label), std::move(value), std::nullopt);
  return std::move(b).Finish();
}

Tree Tree::Node(std::string label, std::span<const Tree> children) {
  Builder b;
  NodeId root = b.Open(std::move(label), Value(), std::nullopt);
  for (const Tree& c : children) b.Copy(c, c.root(), root);
  return std::move(b).Finish();
}

const internal::TreeNode& Tree::node(NodeId o) const {
  if (o >= nodes_.size()) {
    throw TreeError("unknown node " + std::to_string(o));
  }
  return nodes_[o];
}

std::optional<NodeId> Tree::parent(NodeId o) const { return node(o).parent; }

std::uint32_t Tree::sibling_index(NodeId o) const {
  auto p = parent(o);
  if (!p) return 0;
  const auto& siblings = nodes_[*p].children;
  return static_cast<std::uint32_t>(
      std::find(siblings.begin(), siblings.end(), o) - siblings.begin());
}

std::uint32_t Tree::depth(NodeId o) const {
  std::uint32_t d = 0;
  for (auto p = parent(o); p; p = nodes_[*p].parent) ++d;
  return d;
}

bool Tree::is_strict_ancestor(NodeId ancestor, NodeId o) const {
  for (auto p = parent(o); p; p = nodes_[*p].parent) {
    if (*p == ancestor) return true;
  }
  return false;
}

Path Tree::PathOf(NodeId o) const {
  Path path;
  for (NodeId cur = o; nodes_[cur].parent; cur = *node(cur).parent) {
    path.push_back(sibling_index(cur));
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::optional<NodeId> Tree::Find(const Path& path) const {
  NodeId cur = root();
  for (std::uint32_t i : path) {
    const auto& ch = nodes_[cur].children;
    if (i >= ch.size()) return std::nullopt;
    cur = ch[i];
  }
  return cur;
}

NodeId Tree::At(const Path& path) const {
  auto o = Find(path);
  if (!o) {
    std::string s;
    for (std::uint32_t i : path) s += "." + std::to_string(i);
    throw TreeError("no node at path [" + (s.empty() ? s : s.substr(1)) +
                    "]");
  }
  return *o;
}

std::vector<NodeId> Tree::Holes() const {
  std::vector<NodeId> out;
  for (NodeId o = 0; o < nodes_.size(); ++o) {
    if (nodes_[o].label == kHoleLabel) out.push_back(o);
  }
  return out;
}

void Tree::Validate() const {
  if (nodes_.empty()) throw TreeError("empty tree");
  if (nodes_[0].parent) throw TreeError("root has a parent");
  std::vector<int> parents(nodes_.size(), 0);
  for (NodeId o = 0; o < nodes_.size(); ++o) {
    const auto& n = nodes_[o];
    if (o != 0 && !n.parent) throw TreeError("second root");
    if (!n.children.empty() && !n.value.is_undef()) {
      throw TreeError("value on inner node " + std::to_string(o));
    }
    for (NodeId c : n.children) {
      if (c >= nodes_.size() || c == o) throw TreeError("bad child id");
      if (nodes_[c].parent != o) throw TreeError("child/parent mismatch");
      ++parents[c];
    }
  }
  for (NodeId o = 1; o < nodes_.size(); ++o) {
    if (parents[o] != 1) throw TreeError("node without unique parent");
  }
}

std::strong_ordering operator<=>(const Tree& a, const Tree& b) {
  // Node ids are preorder, so the preorder sequence of (label, value,
  // child count) determines the ordered tree.
  std::size_t n = std::min(a.nodes_.size(), b.nodes_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& x = a.nodes_[i];
    const auto& y = b.nodes_[i];
    if (auto c = x.label <=> y.label; c != 0) return c;
    if (auto c = x.children.size() <=> y.children.size(); c != 0) return c;
    if (auto c = x.value <=> y.value; c != 0) return c;
  }
  return a.nodes_.size() <=> b.nodes_.size();
}

NodeId Tree::Builder::Open(std::string label, Value value,
                           std::optional<NodeId> parent) {
  NodeId id = static_cast<NodeId>(nodes_.size());
  if (!parent && !nodes_.empty()) throw TreeError("second root");
  if (parent) {
    if (*parent >= nodes_.size()) throw TreeError("unknown parent");
    if (!nodes_[*parent].value.is_undef()) {
      throw TreeError("cannot add a child below a valued leaf");
    }
    // Preorder: the parent must lie on the rightmost path.
    NodeId last = id - 1;
    bool on_path = false;
    for (std::optional<NodeId> cur = last; cur; cur = nodes_[*cur].parent) {
      if (*cur == *parent) {
        on_path = true;
        break;
      }
    }
    if (!on_path) throw TreeError("nodes must be built in preorder");
    nodes_[*parent].children.push_back(id);
  }
  nodes_.push_back(
      internal::TreeNode{std::move(label), std::move(value), parent, {}});
  return id;
}

NodeId Tree::Builder::Copy(const Tree& src, NodeId at,
                           std::optional<NodeId> parent) {
  NodeId id = Open(src.label(at), src.value(at), parent);
  for (NodeId c : src.children(at)) Copy(src, c, id);
  return id;
}

Tree Tree::Builder::Finish() && {
  if (nodes_.empty()) throw TreeError("empty tree");
  Tree t;
  t.nodes_ = std::move(nodes_);
  return t;
}

Context Context::FromTree(Tree tree) {
  auto holes = tree.Holes();
  if (holes.size() != 1) {
    throw TreeError("a context needs exactly one hole, found " +
                    std::to_string(holes.size()));
  }
  NodeId h = holes.front();
  if (!tree.is_leaf(h) || !tree.value(h).is_undef()) {
    throw TreeError("the hole must be a leaf without value");
  }
  return Context(std::move(tree), h);
}

namespace {

void Render(const Tree& t, NodeId o, bool top, std::ostringstream& out) {
  const std::string& label = t.label(o);
  if (label == kHoleLabel) {
    out << "XI";
    return;
  }
  if (t.is_leaf(o)) {
    if (!t.value(o).is_undef()) {
      if (top) {
        out << "LEAF(" << label << ", " << ToString(t.value(o)) << ")";
      } else {
        out << label << "(" << ToString(t.value(o)) << ")";
      }
    } else {
      out << label << (top ? "<>" : "");
    }
    return;
  }
  out << label << "<";
  auto ch = t.children(o);
  for (std::size_t i = 0; i < ch.size(); ++i) {
    if (i > 0) out << ", ";
    Render(t, ch[i], false, out);
  }
  out << ">";
}

}  // namespace

std::string ToString(const Tree& t) {
  std::ostringstream out;
  Render(t, t.root(), true, out);
  return out.str();
}

}  // namespace rsasm
