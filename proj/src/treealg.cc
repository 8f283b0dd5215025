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

#include "rsasm/treealg.h"

#include "rsasm/error.h"

namespace rsasm {
namespace {

void CheckNode(const Tree& t, NodeId o) {
  if (!t.contains(o)) throw TreeError("unknown node " + std::to_string(o));
}

// Copies `src` below `parent`, replacing node `target` by `replacement`.
void CopyReplacing(const Tree& src, NodeId at, NodeId target,
                   const Hedge& replacement, Tree::Builder& b,
                   std::optional<NodeId> parent) {
  if (at == target) {
    for (const Tree& r : replacement) b.Copy(r, r.root(), parent);
    return;
  }
  NodeId id = b.Open(src.label(at), src.value(at), parent);
  for (NodeId c : src.children(at)) {
    CopyReplacing(src, c, target, replacement, b, id);
  }
}

Tree Extend(const Tree& t, const Hedge& h, bool left) {
  if (t.label(t.root()) == kHoleLabel) {
    throw TreeError("cannot extend a context whose root is the hole");
  }
  if (!t.value(t.root()).is_undef()) {
    throw TreeError("cannot extend a valued leaf");
  }
  Tree::Builder b;
  NodeId root = b.Open(t.label(t.root()), Value(), std::nullopt);
  if (left) {
    for (const Tree& x : h) b.Copy(x, x.root(), root);
  }
  for (NodeId c : t.children(t.root())) b.Copy(t, c, root);
  if (!left) {
    for (const Tree& x : h) b.Copy(x, x.root(), root);
  }
  return std::move(b).Finish();
}

}  // namespace

Tree Subtree(const Tree& t, NodeId o) {
  CheckNode(t, o);
  Tree::Builder b;
  b.Copy(t, o, std::nullopt);
  return std::move(b).Finish();
}

Tree ReplaceNode(const Tree& t, NodeId o, const Hedge& h) {
  CheckNode(t, o);
  if (o == t.root()) {
    if (h.size() != 1) {
      throw TreeError("the root can only be replaced by a single tree");
    }
    return h.front();
  }
  if (!t.value(*t.parent(o)).is_undef()) {
    throw TreeError("parent carries a value");
  }
  Tree::Builder b;
  CopyReplacing(t, t.root(), o, h, b, std::nullopt);
  return std::move(b).Finish();
}

Context ContextOf(const Tree& t, NodeId o1, NodeId o2) {
  CheckNode(t, o1);
  CheckNode(t, o2);
  if (!t.is_strict_ancestor(o1, o2)) {
    throw TreeError("context needs a strict ancestor pair");
  }
  Tree::Builder b;
  CopyReplacing(t, o1, o2, {Tree::Hole()}, b, std::nullopt);
  return Context::FromTree(std::move(b).Finish());
}

Tree SubstTT(const Tree& t1, NodeId o, const Tree& t2) {
  return ReplaceNode(t1, o, {t2});
}

Context SubstTC(const Tree& t1, NodeId o) {
  return Context::FromTree(ReplaceNode(t1, o, {Tree::Hole()}));
}

Context SubstCC(const Context& c1, const Context& c2) {
  return Context::FromTree(ReplaceNode(c1.tree(), c1.hole(), {c2.tree()}));
}

Tree SubstCT(const Context& c1, const Tree& t2) {
  if (!t2.Holes().empty()) throw TreeError("tree contains a hole");
  return ReplaceNode(c1.tree(), c1.hole(), {t2});
}

Tree LabelHedge(const std::string& a, const Hedge& h) {
  return Tree::Node(a, h);
}

Context LabelContext(const std::string& a, const Context& c) {
  return Context::FromTree(Tree::Node(a, {c.tree()}));
}

Context LeftExtend(const Hedge& h, const Context& c) {
  return Context::FromTree(Extend(c.tree(), h, true));
}

Context RightExtend(const Hedge& h, const Context& c) {
  return Context::FromTree(Extend(c.tree(), h, false));
}

Tree LeftExtendTree(const Tree& t, const Hedge& h) {
  return Extend(t, h, true);
}

Tree RightExtendTree(const Tree& t, const Hedge& h) {
  return Extend(t, h, false);
}

Hedge Concat(const Hedge& h1, const Hedge& h2) {
  Hedge out = h1;
  out.insert(out.end(), h2.begin(), h2.end());
  return out;
}

Tree InjectHedge(const Context& c, const Hedge& h) {
  for (const Tree& t : h) {
    if (!t.Holes().empty()) throw TreeError("hedge contains a hole");
  }
  return ReplaceNode(c.tree(), c.hole(), h);
}

Context InjectContext(const Context& c1, const Context& c2) {
  return SubstCC(c1, c2);
}

Hedge ChildHedge(const Tree& t) {
  Hedge out;
  for (NodeId c : t.children(t.root())) out.push_back(Subtree(t, c));
  return out;
}

}  // namespace rsasm
