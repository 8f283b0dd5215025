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

#include "rsasm/reflect.h"

#include "rsasm/error.h"
#include "rsasm/operators.h"
#include "rsasm/structures.h"
#include "rsasm/treealg.h"

namespace rsasm {
namespace {

Tree TermLeaf(const std::vector<TermPtr>& terms) {
  std::vector<Value> items;
  items.reserve(terms.size());
  for (const auto& t : terms) items.push_back(Drop(t));
  return Tree::Leaf(label::kTerm, Value::OfTuple(std::move(items)));
}

Tree Wrap(const Rule& r) { return Tree::Node(label::kRule, {EncodeRule(r)}); }

Value HeadValue(const TermPtr& head) {
  if (head->kind == Term::Kind::kSym) return Value::Symbol(head->name);
  return Drop(head);
}

std::string PathText(const Tree& t, NodeId o) {
  std::string s = "[";
  Path p = t.PathOf(o);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) s += ".";
    s += std::to_string(p[i]);
  }
  return s + "]";
}

[[noreturn]] void Fail(const Tree& t, NodeId o, const std::string& msg) {
  throw ReflectError(msg + " at node " + PathText(t, o));
}

class Decoder {
 public:
  explicit Decoder(const Tree& t) : t_(t) {}

  RulePtr Rule(NodeId o) {
    const std::string& l = t_.label(o);
    auto ch = t_.children(o);
    if (l == label::kRule) {
      if (ch.size() != 1) Fail(t_, o, "rule node needs exactly one child");
      return Rule(ch[0]);
    }
    if (l == label::kUpdate) {
      Expect(o, {label::kFunc, label::kTerm, label::kTerm});
      auto rhs = Terms(ch[2]);
      if (rhs.size() != 1) Fail(t_, ch[2], "update value needs one term");
      return rule::Assign(Head(ch[0]), Terms(ch[1]), rhs.front());
    }
    if (l == label::kIf) {
      Expect(o, {label::kBool, label::kRule, label::kRule});
      return rule::If(Single(ch[0]), Rule(ch[1]), Rule(ch[2]));
    }
    if (l == label::kPar) {
      std::vector<RulePtr> body;
      for (NodeId c : ch) {
        if (t_.label(c) != label::kRule) Fail(t_, c, "par child is not rule");
        body.push_back(Rule(c));
      }
      return rule::Par(std::move(body));
    }
    if (l == label::kLet) {
      Expect(o, {label::kTerm, label::kTerm, label::kRule});
      auto var = Terms(ch[0]);
      auto bound = Terms(ch[1]);
      if (var.size() != 1 || var[0]->kind != Term::Kind::kVar) {
        Fail(t_, ch[0], "let needs one variable");
      }
      if (bound.size() != 1) Fail(t_, ch[1], "let needs one bound term");
      return rule::Let(var[0]->name, bound[0], Rule(ch[2]));
    }
    if (l == label::kPartial) {
      Expect(o, {label::kFunc, label::kFunc, label::kTerm, label::kTerm});
      const Value& op = t_.value(ch[1]);
      if (op.kind() != Value::Kind::kSymbol || !FindOperator(op.as_symbol()) ||
          op.as_symbol() == kAssignOp) {
        Fail(t_, ch[1], "unknown operator");
      }
      return rule::Partial(Head(ch[0]), Terms(ch[2]), op.as_symbol(),
                           Terms(ch[3]));
    }
    Fail(t_, o, "unexpected label '" + l + "'");
  }

  std::vector<TermPtr> Terms(NodeId o) {
    const Value& v = t_.value(o);
    if (!t_.is_leaf(o) || v.kind() != Value::Kind::kTuple) {
      Fail(t_, o, "term node must be a leaf holding a tuple");
    }
    std::vector<TermPtr> out;
    for (const Value& x : v.as_tuple()) out.push_back(Lift(o, x));
    return out;
  }

 private:
  void Expect(NodeId o, std::initializer_list<const char*> labels) {
    auto ch = t_.children(o);
    if (ch.size() != labels.size()) {
      Fail(t_, o, t_.label(o) + " needs " + std::to_string(labels.size()) +
                      " children");
    }
    std::size_t i = 0;
    for (const char* l : labels) {
      if (t_.label(ch[i]) != l) {
        Fail(t_, ch[i], std::string("expected label '") + l + "'");
      }
      ++i;
    }
  }

  TermPtr Lift(NodeId o, const Value& v) {
    try {
      return Raise(v);
    } catch (const ReflectError& e) {
      Fail(t_, o, e.what());
    }
  }

  TermPtr Single(NodeId o) {
    if (!t_.is_leaf(o)) Fail(t_, o, "bool node must be a leaf");
    return Lift(o, t_.value(o));
  }

  TermPtr Head(NodeId o) {
    if (!t_.is_leaf(o)) Fail(t_, o, "func node must be a leaf");
    const Value& v = t_.value(o);
    if (v.kind() == Value::Kind::kSymbol) return term::Sym(v.as_symbol());
    if (v.kind() == Value::Kind::kTerm || v.kind() == Value::Kind::kNode) {
      return Lift(o, v);
    }
    Fail(t_, o, "func node holds no function symbol");
  }

  const Tree& t_;
};

std::vector<TermPtr> BetaAt(const Tree& t, NodeId o) {
  const std::string& l = t.label(o);
  auto ch = t.children(o);
  Decoder d(t);
  std::vector<TermPtr> out;
  auto append = [&](std::vector<TermPtr> more) {
    out.insert(out.end(), more.begin(), more.end());
  };
  if (l == label::kRule) {
    if (ch.size() != 1) Fail(t, o, "rule node needs exactly one child");
    return BetaAt(t, ch[0]);
  }
  if (l == label::kUpdate) {
    if (ch.size() != 3) Fail(t, o, "update needs 3 children");
    append(d.Terms(ch[2]));
    append(d.Terms(ch[1]));
    return out;
  }
  if (l == label::kIf) {
    if (ch.size() != 3) Fail(t, o, "if needs 3 children");
    out.push_back(Raise(t.value(ch[0])));
    append(BetaAt(t, ch[1]));
    append(BetaAt(t, ch[2]));
    return out;
  }
  if (l == label::kPar) {
    for (NodeId c : ch) append(BetaAt(t, c));
    return out;
  }
  if (l == label::kLet) {
    if (ch.size() != 3) Fail(t, o, "let needs 3 children");
    auto var = d.Terms(ch[0]);
    auto bound = d.Terms(ch[1]);
    if (var.size() != 1 || var[0]->kind != Term::Kind::kVar ||
        bound.size() != 1) {
      Fail(t, o, "malformed let");
    }
    out.push_back(bound[0]);
    RulePtr body = Substitute(d.Rule(ch[2]), var[0]->name, bound[0]);
    append(Beta(EncodeRule(*body)));
    return out;
  }
  if (l == label::kPartial) {
    RulePtr r = d.Rule(o);
    append(r->args);
    std::vector<TermPtr> op_args;
    if (r->head->kind == Term::Kind::kSym) {
      op_args.push_back(term::App(r->head->name, r->args));
    } else {
      op_args.push_back(term::Apply(r->head, r->args));
    }
    op_args.insert(op_args.end(), r->operands.begin(), r->operands.end());
    out.push_back(term::OpApp(r->op, std::move(op_args)));
    return out;
  }
  Fail(t, o, "unexpected label '" + l + "'");
}

State SelfOnly(const Tree& self) {
  State s;
  s.Set(Location::Self(), Value::OfTree(self));
  return s;
}

Tree ChildByIota(const Tree& self, const char* l) {
  // subtree(IOTA o IN SELF . child(root(), o) AND has_label(o, l))
  TermPtr cond = term::And(
      {term::App("child", {term::App("root"), term::Var("o")}),
       term::App("has_label",
                 {term::Var("o"), term::Const(Value::Label(l))})});
  TermPtr sel = term::Iota("o", kSelfDomain, cond);
  Value v = EvalTerm(SelfOnly(self), *term::App("subtree", {sel}));
  if (v.kind() != Value::Kind::kTree) {
    throw ReflectError(std::string("self has no unique '") + l + "' child");
  }
  return v.as_tree();
}

Tree ChildByScan(const Tree& self, const char* l) {
  std::optional<NodeId> hit;
  for (NodeId c : self.children(self.root())) {
    if (self.label(c) != l) continue;
    if (hit) throw ReflectError(std::string("self has two '") + l + "' children");
    hit = c;
  }
  if (!hit) throw ReflectError(std::string("self has no '") + l + "' child");
  return Subtree(self, *hit);
}

}  // namespace

Tree EncodeRule(const Rule& r) {
  switch (r.kind) {
    case Rule::Kind::kAssign:
      return Tree::Node(label::kUpdate,
                        {Tree::Leaf(label::kFunc, HeadValue(r.head)),
                         TermLeaf(r.args), TermLeaf({r.rhs})});
    case Rule::Kind::kIf:
      return Tree::Node(label::kIf,
                        {Tree::Leaf(label::kBool, Drop(r.rhs)),
                         Wrap(*r.body[0]), Wrap(*r.body[1])});
    case Rule::Kind::kPar: {
      Hedge h;
      for (const auto& b : r.body) h.push_back(Wrap(*b));
      return Tree::Node(label::kPar, h);
    }
    case Rule::Kind::kLet:
      return Tree::Node(label::kLet, {TermLeaf({term::Var(r.var)}),
                                      TermLeaf({r.rhs}), Wrap(*r.body[0])});
    case Rule::Kind::kPartial:
      return Tree::Node(label::kPartial,
                        {Tree::Leaf(label::kFunc, HeadValue(r.head)),
                         Tree::Leaf(label::kFunc, Value::Symbol(r.op)),
                         TermLeaf(r.args), TermLeaf(r.operands)});
  }
  throw ReflectError("unknown rule kind");
}

RulePtr DecodeRule(const Tree& t) { return Decoder(t).Rule(t.root()); }

Tree FuncEntry(const std::string& name, std::uint32_t arity) {
  return Tree::Node(label::kFunc,
                    {Tree::Leaf(label::kName, Value::Symbol(name)),
                     Tree::Leaf(label::kArity, Value::NatV(arity))});
}

Tree EncodeSignature(const Signature& sig) {
  Hedge h;
  for (const auto& f : sig.symbols()) h.push_back(FuncEntry(f.name, f.arity));
  return Tree::Node(label::kSignature, h);
}

Signature DecodeSignature(const Tree& t) {
  if (t.label(t.root()) != label::kSignature) {
    Fail(t, t.root(), "expected label 'signature'");
  }
  std::vector<FunctionSymbol> symbols;
  for (NodeId f : t.children(t.root())) {
    auto ch = t.children(f);
    if (t.label(f) != label::kFunc || ch.size() != 2 ||
        t.label(ch[0]) != label::kName || t.label(ch[1]) != label::kArity ||
        !t.is_leaf(ch[0]) || !t.is_leaf(ch[1])) {
      Fail(t, f, "malformed func entry");
    }
    const Value& name = t.value(ch[0]);
    const Value& arity = t.value(ch[1]);
    if (name.kind() != Value::Kind::kSymbol) Fail(t, ch[0], "name not a symbol");
    if (arity.kind() != Value::Kind::kNat || arity.as_nat() > UINT32_MAX) {
      Fail(t, ch[1], "arity not a number");
    }
    symbols.push_back(FunctionSymbol{name.as_symbol(),
                                     static_cast<std::uint32_t>(arity.as_nat())});
  }
  try {
    return Signature(std::move(symbols));
  } catch (const SignatureError& e) {
    throw ReflectError(std::string("bad signature: ") + e.what());
  }
}

Tree EncodeSelf(const Signature& sig, const Rule& r) {
  return Tree::Node(label::kSelf, {EncodeSignature(sig), Wrap(r)});
}

void CheckSelfShape(const Tree& self) {
  auto ch = self.children(self.root());
  if (self.label(self.root()) != label::kSelf || ch.size() != 2 ||
      self.label(ch[0]) != label::kSignature ||
      self.label(ch[1]) != label::kRule) {
    throw ReflectError("self tree must be self<signature<...>, rule<...>>");
  }
}

Value Drop(const TermPtr& t) { return DropTerm(t); }

Value DropRule(const Rule& r) { return Value::OfTree(EncodeRule(r)); }

TermPtr Raise(const Value& v) {
  switch (v.kind()) {
    case Value::Kind::kTerm:
      return v.as_term();
    case Value::Kind::kSymbol:
      return term::Sym(v.as_symbol());
    case Value::Kind::kNode:
      return term::Subloc(v.as_node());
    default:
      if (v.is_scalar()) return term::Const(v);
      throw ReflectError(std::string("cannot raise a ") + KindName(v.kind()));
  }
}

RulePtr RaiseRule(const Value& v) {
  if (v.kind() != Value::Kind::kTree) {
    throw ReflectError(std::string("cannot raise a ") + KindName(v.kind()) +
                       " to a rule");
  }
  return DecodeRule(v.as_tree());
}

bool IsLiftable(const Value& v) {
  switch (v.kind()) {
    case Value::Kind::kTerm:
    case Value::Kind::kSymbol:
    case Value::Kind::kNode:
      return true;
    default:
      return v.is_scalar();
  }
}

std::vector<TermPtr> Beta(const Tree& t) { return BetaAt(t, t.root()); }

Tree RuleOfSelf(const Tree& self) { return ChildByIota(self, label::kRule); }

Tree SignatureOfSelf(const Tree& self) {
  return ChildByIota(self, label::kSignature);
}

Tree RuleOfSelfByScan(const Tree& self) {
  return ChildByScan(self, label::kRule);
}

Tree SignatureOfSelfByScan(const Tree& self) {
  return ChildByScan(self, label::kSignature);
}

std::pair<std::string, SharedUpdate> NewFunction(const State& state,
                                                 std::uint32_t arity,
                                                 ReserveAllocator& reserve) {
  Value self = state.GetSelf();
  if (self.kind() != Value::Kind::kTree) {
    throw ReflectError("self does not hold a tree");
  }
  const Tree& t = self.as_tree();
  CheckSelfShape(t);
  std::string name = reserve.Allocate();
  Location sig{kSelf, {}, kSignaturePath};
  SharedUpdate s{std::move(sig), "right_extend",
                 {Value::OfTree(FuncEntry(name, arity))}, {}};
  return {std::move(name), std::move(s)};
}

}  // namespace rsasm
