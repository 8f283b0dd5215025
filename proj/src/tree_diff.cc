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

#include "rsasm/tree_diff.h"

#include <functional>
#include <map>
#include <optional>

#include "rsasm/error.h"
#include "rsasm/reflect.h"
#include "rsasm/structures.h"
#include "rsasm/treealg.h"

namespace rsasm {
namespace algebra {
namespace {

AlgebraPtr Make(AlgebraTerm a) {
  return std::make_shared<const AlgebraTerm>(std::move(a));
}

}  // namespace

AlgebraPtr SubtreeAt(Path path) {
  AlgebraTerm a;
  a.kind = AlgebraTerm::Kind::kSubtreeAt;
  a.path = std::move(path);
  return Make(std::move(a));
}

AlgebraPtr ContextAt(Path path, Path path2) {
  AlgebraTerm a;
  a.kind = AlgebraTerm::Kind::kContextAt;
  a.path = std::move(path);
  a.path2 = std::move(path2);
  return Make(std::move(a));
}

AlgebraPtr Reuse(std::uint64_t k, std::uint64_t l, std::uint64_t occurrence) {
  AlgebraTerm a;
  a.kind = AlgebraTerm::Kind::kReuse;
  a.k = k;
  a.l = l;
  a.occurrence = occurrence;
  return Make(std::move(a));
}

AlgebraPtr Literal(Tree t) {
  AlgebraTerm a;
  a.kind = AlgebraTerm::Kind::kLiteral;
  a.literal = std::make_shared<const Tree>(std::move(t));
  return Make(std::move(a));
}

AlgebraPtr Hedge(std::vector<AlgebraPtr> args) {
  return Op(AlgebraTerm::Kind::kHedge, std::move(args));
}

AlgebraPtr LabelHedge(std::string label, std::vector<AlgebraPtr> args) {
  return Op(AlgebraTerm::Kind::kLabelHedge, std::move(args), std::move(label));
}

AlgebraPtr Op(AlgebraTerm::Kind kind, std::vector<AlgebraPtr> args,
              std::string label) {
  AlgebraTerm a;
  a.kind = kind;
  a.args = std::move(args);
  a.label = std::move(label);
  return Make(std::move(a));
}

}  // namespace algebra

namespace {

using K = AlgebraTerm::Kind;

void NeedArgs(const AlgebraTerm& a, std::size_t n) {
  if (a.args.size() != n) {
    throw TreeError("algebra term " + ToString(a) + " needs " +
                    std::to_string(n) + " arguments");
  }
}

const Tree& TreeOf(const Value& v) {
  if (v.kind() != Value::Kind::kTree) {
    throw TreeError(std::string("expected a tree, got ") + KindName(v.kind()));
  }
  return v.as_tree();
}

Context ContextOfValue(const Value& v) { return Context::FromTree(TreeOf(v)); }

const char* OpName(K kind) {
  switch (kind) {
    case K::kLabelHedge: return "label_hedge";
    case K::kLabelContext: return "label_context";
    case K::kLeftExtend: return "left_extend";
    case K::kRightExtend: return "right_extend";
    case K::kConcat: return "concat";
    case K::kInjectHedge: return "inject_hedge";
    case K::kInjectContext: return "inject_context";
    case K::kHedge: return "hedge";
    default: return "";
  }
}

std::string PathString(const Path& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) s += ".";
    s += std::to_string(p[i]);
  }
  return s + "]";
}

TermPtr NodeTerm(const Path& p) { return term::Subloc(p); }

TermPtr NatTerm(std::uint64_t n) { return term::Const(Value::NatV(n)); }

// Finds reusable subtrees of t below its rule node.
class Reuser {
 public:
  explicit Reuser(const Tree& t) : t_(t) {
    auto rule = t.Find(kRulePath);
    if (!rule) return;
    base_ = t.depth(*rule);
    Index(*rule);
  }

  // Deepest match first, then leftmost in preorder.
  AlgebraPtr Find(const Tree& s) const {
    const Entry* best = nullptr;
    for (const Entry& e : entries_) {
      if (best && e.k <= best->k) continue;
      if (Subtree(t_, e.node) == s) best = &e;
    }
    if (!best) return nullptr;
    return algebra::Reuse(best->k, best->l, best->occurrence);
  }

 private:
  struct Entry {
    NodeId node;
    std::uint64_t k;
    std::uint64_t l;
    std::uint64_t occurrence;
  };

  void Index(NodeId o) {
    std::uint64_t k = t_.depth(o) - base_;
    std::uint64_t l = t_.sibling_index(o);
    std::uint64_t occ = seen_[{k, l}]++;
    entries_.push_back({o, k, l, occ});
    for (NodeId c : t_.children(o)) Index(c);
  }

  const Tree& t_;
  std::uint32_t base_ = 0;
  std::vector<Entry> entries_;
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> seen_;
};

bool IsPrefix(const Tree& a, NodeId oa, const Tree& b, NodeId ob,
              bool proper) {
  auto ca = a.children(oa);
  auto cb = b.children(ob);
  if (ca.size() > cb.size() || (proper && ca.size() == cb.size())) {
    return false;
  }
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (!(Subtree(a, ca[i]) == Subtree(b, cb[i]))) return false;
  }
  return true;
}

class Differ {
 public:
  explicit Differ(const Tree& t) : t_(t), reuser_(t) {}

  AlgebraPtr Node(const Tree& t2, NodeId o) {
    Tree s = Subtree(t2, o);
    if (auto r = reuser_.Find(s)) return r;
    Path p = t2.PathOf(o);
    if (auto same = t_.Find(p);
        same && t_.label(*same) == t2.label(o) &&
        t_.value(*same).is_undef() && t2.value(o).is_undef() &&
        IsPrefix(t_, *same, t2, o, true)) {
      std::vector<AlgebraPtr> extra;
      auto cs = t2.children(o);
      for (std::size_t i = t_.children(*same).size(); i < cs.size(); ++i) {
        extra.push_back(Node(t2, cs[i]));
      }
      return algebra::Op(K::kRightExtend,
                         {algebra::Hedge(std::move(extra)),
                          algebra::SubtreeAt(std::move(p))});
    }
    const std::string& label = t2.label(o);
    if (t2.is_leaf(o) || label == label::kUpdate || label == label::kPartial) {
      return algebra::Literal(std::move(s));
    }
    std::vector<AlgebraPtr> kids;
    for (NodeId c : t2.children(o)) kids.push_back(Node(t2, c));
    return algebra::LabelHedge(label, std::move(kids));
  }

 private:
  const Tree& t_;
  Reuser reuser_;
};

void RequireSelfShape(const Tree& t) {
  try {
    CheckSelfShape(t);
  } catch (const ReflectError& e) {
    throw TreeError(e.what());
  }
}

AlgebraPtr SignatureDiff(const Tree& t, const Tree& t2) {
  NodeId a = t.At(kSignaturePath);
  NodeId b = t2.At(kSignaturePath);
  if (Subtree(t, a) == Subtree(t2, b)) return algebra::SubtreeAt(kSignaturePath);
  if (t.label(a) == t2.label(b) && IsPrefix(t, a, t2, b, true)) {
    std::vector<AlgebraPtr> extra;
    auto cs = t2.children(b);
    for (std::size_t i = t.children(a).size(); i < cs.size(); ++i) {
      extra.push_back(algebra::Literal(Subtree(t2, cs[i])));
    }
    return algebra::Op(K::kRightExtend, {algebra::Hedge(std::move(extra)),
                                         algebra::SubtreeAt(kSignaturePath)});
  }
  return algebra::Literal(Subtree(t2, b));
}

AlgebraPtr RuleDiff(const Tree& t, const Tree& t2) {
  NodeId b = t2.At(kRulePath);
  return Differ(t).Node(t2, b);
}

}  // namespace

Value EvalAlgebra(const AlgebraTerm& a, const Tree& t) {
  auto arg = [&](std::size_t i) { return EvalAlgebra(*a.args[i], t); };
  switch (a.kind) {
    case K::kSubtreeAt:
      return Value::OfTree(Subtree(t, t.At(a.path)));
    case K::kContextAt:
      return Value::OfTree(ContextOf(t, t.At(a.path), t.At(a.path2)).tree());
    case K::kReuse: {
      Value n = NodeAt(t, a.k, a.l, a.occurrence);
      if (n.is_undef()) throw TreeError("no node for " + ToString(a));
      return Value::OfTree(Subtree(t, t.At(n.as_node())));
    }
    case K::kLiteral:
      return Value::OfTree(a.literal);
    case K::kHedge: {
      rsasm::Hedge h;
      for (const auto& x : a.args) {
        auto part = AsHedge(EvalAlgebra(*x, t));
        h.insert(h.end(), part.begin(), part.end());
      }
      return Value::OfHedge(std::move(h));
    }
    case K::kLabelHedge: {
      rsasm::Hedge h;
      for (const auto& x : a.args) {
        auto part = AsHedge(EvalAlgebra(*x, t));
        h.insert(h.end(), part.begin(), part.end());
      }
      return Value::OfTree(rsasm::LabelHedge(a.label, h));
    }
    case K::kLabelContext:
      NeedArgs(a, 1);
      return Value::OfTree(
          rsasm::LabelContext(a.label, ContextOfValue(arg(0))).tree());
    case K::kLeftExtend:
      NeedArgs(a, 2);
      return Value::OfTree(LeftExtendTree(TreeOf(arg(1)), AsHedge(arg(0))));
    case K::kRightExtend:
      NeedArgs(a, 2);
      return Value::OfTree(RightExtendTree(TreeOf(arg(1)), AsHedge(arg(0))));
    case K::kConcat:
      NeedArgs(a, 2);
      return Value::OfHedge(Concat(AsHedge(arg(0)), AsHedge(arg(1))));
    case K::kInjectHedge:
      NeedArgs(a, 2);
      return Value::OfTree(InjectHedge(ContextOfValue(arg(0)), AsHedge(arg(1))));
    case K::kInjectContext:
      NeedArgs(a, 2);
      return Value::OfTree(
          InjectContext(ContextOfValue(arg(0)), ContextOfValue(arg(1))).tree());
  }
  throw TreeError("unknown algebra term");
}

Tree EvalAlgebraTree(const AlgebraTerm& a, const Tree& t) {
  return TreeOf(EvalAlgebra(a, t));
}

TermPtr AlgebraToTerm(const AlgebraTerm& a) {
  std::vector<TermPtr> args;
  for (const auto& x : a.args) args.push_back(AlgebraToTerm(*x));
  switch (a.kind) {
    case K::kSubtreeAt:
      return term::App("subtree", {NodeTerm(a.path)});
    case K::kContextAt:
      return term::App("context", {NodeTerm(a.path), NodeTerm(a.path2)});
    case K::kReuse:
      return term::App(
          "subtree", {term::App("node_at", {NatTerm(a.k), NatTerm(a.l),
                                            NatTerm(a.occurrence)})});
    case K::kLiteral:
      return term::Const(Value::OfTree(a.literal));
    case K::kLabelHedge:
    case K::kLabelContext:
      args.insert(args.begin(), term::Const(Value::Label(a.label)));
      return term::App(OpName(a.kind), std::move(args));
    default:
      return term::App(OpName(a.kind), std::move(args));
  }
}

std::string ToString(const AlgebraTerm& a) {
  switch (a.kind) {
    case K::kSubtreeAt:
      return "subtree" + PathString(a.path);
    case K::kContextAt:
      return "context" + PathString(a.path) + PathString(a.path2);
    case K::kReuse:
      return "reuse(" + std::to_string(a.k) + "," + std::to_string(a.l) + "," +
             std::to_string(a.occurrence) + ")";
    case K::kLiteral:
      return "lit(" + ToString(*a.literal) + ")";
    default: {
      std::string s = OpName(a.kind);
      s += "(";
      bool first = true;
      if (!a.label.empty()) {
        s += a.label;
        first = false;
      }
      for (const auto& x : a.args) {
        if (!first) s += ", ";
        s += ToString(*x);
        first = false;
      }
      return s + ")";
    }
  }
}

bool Mentions(const AlgebraTerm& a, AlgebraTerm::Kind kind) {
  if (a.kind == kind) return true;
  for (const auto& x : a.args) {
    if (Mentions(*x, kind)) return true;
  }
  return false;
}

AlgebraPtr TreeDiff(const Tree& t, const Tree& t2) {
  RequireSelfShape(t);
  RequireSelfShape(t2);
  return algebra::LabelHedge(label::kSelf,
                             {SignatureDiff(t, t2), RuleDiff(t, t2)});
}

RulePtr TreeUpdateRule(const Tree& t, const Tree& t2) {
  RequireSelfShape(t);
  RequireSelfShape(t2);
  NodeId sa = t.At(kSignaturePath), sb = t2.At(kSignaturePath);
  NodeId ra = t.At(kRulePath), rb = t2.At(kRulePath);
  bool sig_changed = !(Subtree(t, sa) == Subtree(t2, sb));
  bool rule_changed = !(Subtree(t, ra) == Subtree(t2, rb));
  std::vector<RulePtr> parts;
  if (sig_changed || !rule_changed) {
    parts.push_back(rule::Assign(term::Subloc(kSignaturePath), {},
                                 AlgebraToTerm(*SignatureDiff(t, t2))));
  }
  if (rule_changed) {
    parts.push_back(rule::Assign(term::Subloc(kRulePath), {},
                                 AlgebraToTerm(*RuleDiff(t, t2))));
  }
  return rule::Par(std::move(parts));
}

}  // namespace rsasm
