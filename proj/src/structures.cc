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

#include "rsasm/structures.h"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

#include "rsasm/error.h"
#include "rsasm/operators.h"
#include "rsasm/reserve.h"
#include "rsasm/tree.h"
#include "rsasm/treealg.h"

namespace rsasm {
namespace {

using Args = std::vector<Value>;

class Evaluator;
using BuiltinFn = std::function<Value(Evaluator&, const Args&)>;

struct Builtin {
  // -1 for variadic.
  int arity;
  // Positions holding a label token.
  std::vector<std::size_t> labels;
  // Strict builtins yield undef as soon as one argument is undef.
  bool strict;
  BuiltinFn fn;
};

const std::map<std::string, Builtin>& Builtins();

std::uint64_t NatArg(const Value& v, const char* fn) {
  if (v.kind() != Value::Kind::kNat) {
    throw EvalError(std::string(fn) + " expects a number, got " +
                    KindName(v.kind()));
  }
  return v.as_nat();
}

const std::vector<Value>& SetArg(const Value& v, const char* fn) {
  if (v.kind() != Value::Kind::kSet) {
    throw EvalError(std::string(fn) + " expects a set, got " +
                    KindName(v.kind()));
  }
  return v.as_set();
}

std::string LabelArg(const Value& v, const char* fn) {
  if (v.kind() == Value::Kind::kLabel) return v.as_label();
  throw EvalError(std::string(fn) + " expects a label, got " +
                  KindName(v.kind()));
}

Context ContextArg(const Value& v, const char* fn) {
  if (v.kind() != Value::Kind::kTree) {
    throw EvalError(std::string(fn) + " expects a context, got " +
                    KindName(v.kind()));
  }
  return Context::FromTree(v.as_tree());
}

// A context or a plain tree; extension keeps the number of holes.
const Tree& TreeArg(const Value& v, const char* fn) {
  if (v.kind() != Value::Kind::kTree) {
    throw EvalError(std::string(fn) + " expects a tree or context, got " +
                    KindName(v.kind()));
  }
  return v.as_tree();
}

Hedge HedgeArgs(const Args& args, std::size_t from) {
  Hedge h;
  for (std::size_t i = from; i < args.size(); ++i) {
    auto part = AsHedge(args[i]);
    h.insert(h.end(), part.begin(), part.end());
  }
  return h;
}

class Evaluator {
 public:
  Evaluator(const State& state, ReserveAllocator* reserve)
      : state_(state), reserve_(reserve) {}

  Value Eval(const Term& t, Env& env);
  Value Head(const Term& head, Env& env);

  const Tree& SelfTree() {
    if (!self_) {
      Value v = state_.GetSelf();
      if (v.kind() != Value::Kind::kTree) {
        throw EvalError("self does not hold a tree");
      }
      self_ = v.tree_ptr();
    }
    return *self_;
  }

  // Node of the self tree addressed by a node value; nullopt if absent.
  std::optional<NodeId> NodeOf(const Value& v, const char* fn) {
    if (v.kind() != Value::Kind::kNode) {
      throw EvalError(std::string(fn) + " expects a node, got " +
                      KindName(v.kind()));
    }
    return SelfTree().Find(v.as_node());
  }

  Value NodeValue(NodeId o) { return Value::Node(SelfTree().PathOf(o)); }

  std::string NewName() {
    if (!reserve_) {
      owned_.emplace(state_.signature());
      reserve_ = &*owned_;
    }
    return reserve_->Allocate();
  }

  const State& state() const { return state_; }

 private:
  std::vector<Value> DomainElements(const std::string& domain);
  Value Bind(const Term& t, Env& env);
  Value ReadLocation(const std::string& name, Args args);
  Value ReadNode(const Path& path, const Args& args);

  const State& state_;
  ReserveAllocator* reserve_;
  std::optional<ReserveAllocator> owned_;
  std::shared_ptr<const Tree> self_;
};

std::vector<Value> Evaluator::DomainElements(const std::string& domain) {
  if (domain == kSelfDomain) {
    std::vector<Value> out;
    const Tree& t = SelfTree();
    for (NodeId o = 0; o < t.size(); ++o) out.push_back(NodeValue(o));
    return out;
  }
  auto it = state_.background().domains.find(domain);
  if (it == state_.background().domains.end()) {
    throw EvalError("unknown domain " + domain);
  }
  return it->second;
}

Value Evaluator::Bind(const Term& t, Env& env) {
  std::vector<Value> hits;
  auto saved = env.find(t.name) != env.end()
                   ? std::optional<Value>(env.at(t.name))
                   : std::nullopt;
  for (const Value& x : DomainElements(t.domain)) {
    env[t.name] = x;
    if (Eval(*t.args[0], env).is_true()) {
      hits.push_back(x);
      if (t.kind == Term::Kind::kExists) break;
      if (t.kind == Term::Kind::kIota && hits.size() > 1) break;
    }
  }
  if (saved) {
    env[t.name] = *saved;
  } else {
    env.erase(t.name);
  }
  switch (t.kind) {
    case Term::Kind::kIota:
      return hits.size() == 1 ? hits.front() : Value();
    case Term::Kind::kExists:
      return Value::Bool(!hits.empty());
    default:
      return Value::OfSet(std::move(hits));
  }
}

Value Evaluator::ReadLocation(const std::string& name, Args args) {
  auto arity = state_.signature().ArityOf(name);
  if (!arity) throw SignatureError("unknown function symbol " + name);
  if (*arity != args.size()) {
    throw SignatureError(name + " expects " + std::to_string(*arity) +
                         " arguments, got " + std::to_string(args.size()));
  }
  for (const auto& a : args) {
    if (a.is_undef()) return Value();
  }
  return state_.Get(Location{name, std::move(args), {}});
}

Value Evaluator::ReadNode(const Path& path, const Args& args) {
  if (!args.empty()) {
    throw SignatureError("sublocation symbols are nullary");
  }
  return state_.Get(Location{kSelf, {}, path});
}

Value Evaluator::Head(const Term& head, Env& env) {
  Value v;
  if (head.kind == Term::Kind::kRaise) {
    v = Eval(*head.args[0], env);
    if (v.kind() == Value::Kind::kTerm) return Head(*v.as_term(), env);
  } else {
    v = Eval(head, env);
  }
  if (v.kind() == Value::Kind::kSymbol || v.kind() == Value::Kind::kNode) {
    return v;
  }
  if (v.is_undef()) return v;
  throw EvalError(std::string("target does not denote a function symbol: ") +
                  KindName(v.kind()));
}

Value Evaluator::Eval(const Term& t, Env& env) {
  switch (t.kind) {
    case Term::Kind::kConst:
      return t.value;
    case Term::Kind::kVar: {
      auto it = env.find(t.name);
      if (it == env.end()) throw EvalError("unbound variable " + t.name);
      return it->second;
    }
    case Term::Kind::kApp: {
      Args args;
      args.reserve(t.args.size());
      if (state_.signature().Contains(t.name)) {
        for (const auto& a : t.args) args.push_back(Eval(*a, env));
        return ReadLocation(t.name, std::move(args));
      }
      auto it = Builtins().find(t.name);
      if (it == Builtins().end()) {
        throw SignatureError("unknown function symbol " + t.name);
      }
      const Builtin& b = it->second;
      if (b.arity >= 0 && static_cast<std::size_t>(b.arity) != t.args.size()) {
        throw SignatureError(t.name + " expects " + std::to_string(b.arity) +
                             " arguments, got " +
                             std::to_string(t.args.size()));
      }
      for (const auto& a : t.args) args.push_back(Eval(*a, env));
      if (b.strict) {
        for (const auto& a : args) {
          if (a.is_undef()) return Value();
        }
      }
      return b.fn(*this, args);
    }
    case Term::Kind::kApply: {
      Value h = Head(*t.args[0], env);
      Args args;
      for (std::size_t i = 1; i < t.args.size(); ++i) {
        args.push_back(Eval(*t.args[i], env));
      }
      if (h.is_undef()) return Value();
      if (h.kind() == Value::Kind::kNode) return ReadNode(h.as_node(), args);
      return ReadLocation(h.as_symbol(), std::move(args));
    }
    case Term::Kind::kSym:
      return Value::Symbol(t.name);
    case Term::Kind::kOpApp: {
      if (t.args.empty()) throw EvalError("operator term without location");
      Value current = Eval(*t.args[0], env);
      Args operands;
      for (std::size_t i = 1; i < t.args.size(); ++i) {
        operands.push_back(Eval(*t.args[i], env));
      }
      return ApplyOperator(t.name, current, operands);
    }
    case Term::Kind::kEq:
      return Value::Bool(Eval(*t.args[0], env) == Eval(*t.args[1], env));
    case Term::Kind::kAnd:
    case Term::Kind::kOr: {
      bool is_and = t.kind == Term::Kind::kAnd;
      bool acc = is_and;
      bool undef = false;
      for (const auto& a : t.args) {
        Value v = Eval(*a, env);
        if (v.is_undef()) {
          undef = true;
          continue;
        }
        if (!v.is_bool()) {
          throw EvalError(std::string(is_and ? "AND" : "OR") +
                          " on a non-Boolean");
        }
        acc = is_and ? (acc && v.as_bool()) : (acc || v.as_bool());
      }
      return undef ? Value() : Value::Bool(acc);
    }
    case Term::Kind::kNot: {
      Value v = Eval(*t.args[0], env);
      if (v.is_undef()) return v;
      if (!v.is_bool()) throw EvalError("NOT on a non-Boolean");
      return Value::Bool(!v.as_bool());
    }
    case Term::Kind::kIota:
    case Term::Kind::kExists:
    case Term::Kind::kSetOf:
      return Bind(t, env);
    case Term::Kind::kDomain:
      return Value::OfSet(DomainElements(t.domain));
    case Term::Kind::kDrop:
      return DropTerm(t.args[0]);
    case Term::Kind::kRaise: {
      Value v = Eval(*t.args[0], env);
      switch (v.kind()) {
        case Value::Kind::kTerm:
          return Eval(*v.as_term(), env);
        case Value::Kind::kNode:
          return ReadNode(v.as_node(), {});
        default:
          return v;
      }
    }
    case Term::Kind::kSubloc:
      return Value::Node(t.path);
    case Term::Kind::kTreeLit: {
      Hedge children;
      for (const auto& c : t.args) {
        auto part = AsHedge(Eval(*c, env));
        children.insert(children.end(), part.begin(), part.end());
      }
      if (t.leaf) {
        if (!children.empty()) throw EvalError("valued node with children");
        return Value::OfTree(Tree::Leaf(t.name, Eval(*t.leaf, env)));
      }
      return Value::OfTree(Tree::Node(t.name, children));
    }
    case Term::Kind::kHole:
      return Value::OfTree(Tree::Hole());
  }
  throw EvalError("unknown term kind");
}

// Builtin table --------------------------------------------------------------

Value NodeQuery(Evaluator& ev, const Value& v, const char* fn,
                const std::function<Value(const Tree&, NodeId)>& f) {
  auto o = ev.NodeOf(v, fn);
  if (!o) return Value();
  return f(ev.SelfTree(), *o);
}

const std::map<std::string, Builtin>& Builtins() {
  static const auto* table = new std::map<std::string, Builtin>{
      {"plus",
       {2, {}, true,
        [](Evaluator&, const Args& a) {
          return Value::NatV(NatArg(a[0], "plus") + NatArg(a[1], "plus"));
        }}},
      {"minus",
       {2, {}, true,
        [](Evaluator&, const Args& a) {
          std::uint64_t x = NatArg(a[0], "minus"), y = NatArg(a[1], "minus");
          return Value::NatV(x > y ? x - y : 0);
        }}},
      {"mod",
       {2, {}, true,
        [](Evaluator&, const Args& a) {
          std::uint64_t x = NatArg(a[0], "mod"), y = NatArg(a[1], "mod");
          return y == 0 ? Value() : Value::NatV(x % y);
        }}},
      {"lt",
       {2, {}, true,
        [](Evaluator&, const Args& a) {
          return Value::Bool(NatArg(a[0], "lt") < NatArg(a[1], "lt"));
        }}},
      {"le",
       {2, {}, true,
        [](Evaluator&, const Args& a) {
          return Value::Bool(NatArg(a[0], "le") <= NatArg(a[1], "le"));
        }}},
      {"card",
       {1, {}, true,
        [](Evaluator&, const Args& a) {
          switch (a[0].kind()) {
            case Value::Kind::kSet:
              return Value::NatV(a[0].as_set().size());
            case Value::Kind::kHedge:
              return Value::NatV(a[0].as_hedge().size());
            case Value::Kind::kTuple:
              return Value::NatV(a[0].as_tuple().size());
            default:
              throw EvalError(std::string("card of a ") +
                              KindName(a[0].kind()));
          }
        }}},
      {"in",
       {2, {}, true,
        [](Evaluator&, const Args& a) {
          const auto& s = SetArg(a[1], "in");
          return Value::Bool(std::binary_search(s.begin(), s.end(), a[0]));
        }}},
      {"union",
       {2, {}, true,
        [](Evaluator&, const Args& a) {
          std::vector<Value> out = SetArg(a[0], "union");
          const auto& b = SetArg(a[1], "union");
          out.insert(out.end(), b.begin(), b.end());
          return Value::OfSet(std::move(out));
        }}},
      {"inter",
       {2, {}, true,
        [](Evaluator&, const Args& a) {
          const auto& x = SetArg(a[0], "inter");
          const auto& y = SetArg(a[1], "inter");
          std::vector<Value> out;
          std::set_intersection(x.begin(), x.end(), y.begin(), y.end(),
                                std::back_inserter(out));
          return Value::OfSet(std::move(out));
        }}},
      {"diff",
       {2, {}, true,
        [](Evaluator&, const Args& a) {
          const auto& x = SetArg(a[0], "diff");
          const auto& y = SetArg(a[1], "diff");
          std::vector<Value> out;
          std::set_difference(x.begin(), x.end(), y.begin(), y.end(),
                              std::back_inserter(out));
          return Value::OfSet(std::move(out));
        }}},
      {"tuple",
       {-1, {}, true,
        [](Evaluator&, const Args& a) { return Value::OfTuple(a); }}},
      {"proj",
       {2, {}, true,
        [](Evaluator&, const Args& a) {
          if (a[0].kind() != Value::Kind::kTuple) {
            throw EvalError("proj of a non-tuple");
          }
          std::uint64_t i = NatArg(a[1], "proj");
          const auto& items = a[0].as_tuple();
          if (i == 0 || i > items.size()) return Value();
          return items[i - 1];
        }}},
      {"label_hedge",
       {-1, {0}, true,
        [](Evaluator&, const Args& a) {
          if (a.empty()) throw SignatureError("label_hedge needs a label");
          return Value::OfTree(
              LabelHedge(LabelArg(a[0], "label_hedge"), HedgeArgs(a, 1)));
        }}},
      {"label_context",
       {2, {0}, true,
        [](Evaluator&, const Args& a) {
          return Value::OfTree(LabelContext(LabelArg(a[0], "label_context"),
                                            ContextArg(a[1], "label_context"))
                                   .tree());
        }}},
      {"left_extend",
       {2, {}, true,
        [](Evaluator&, const Args& a) {
          return Value::OfTree(
              LeftExtendTree(TreeArg(a[1], "left_extend"), AsHedge(a[0])));
        }}},
      {"right_extend",
       {2, {}, true,
        [](Evaluator&, const Args& a) {
          return Value::OfTree(
              RightExtendTree(TreeArg(a[1], "right_extend"), AsHedge(a[0])));
        }}},
      {"concat",
       {2, {}, true,
        [](Evaluator&, const Args& a) {
          return Value::OfHedge(Concat(AsHedge(a[0]), AsHedge(a[1])));
        }}},
      {"inject_hedge",
       {2, {}, true,
        [](Evaluator&, const Args& a) {
          return Value::OfTree(
              InjectHedge(ContextArg(a[0], "inject_hedge"), AsHedge(a[1])));
        }}},
      {"inject_context",
       {2, {}, true,
        [](Evaluator&, const Args& a) {
          return Value::OfTree(InjectContext(ContextArg(a[0], "inject_context"),
                                             ContextArg(a[1], "inject_context"))
                                   .tree());
        }}},
      {"leaf",
       {2, {0}, false,
        [](Evaluator&, const Args& a) {
          return Value::OfTree(Tree::Leaf(LabelArg(a[0], "leaf"), a[1]));
        }}},
      {"hedge",
       {-1, {}, true,
        [](Evaluator&, const Args& a) {
          return Value::OfHedge(HedgeArgs(a, 0));
        }}},
      {"empty",
       {0, {}, true,
        [](Evaluator&, const Args&) { return Value::OfHedge({}); }}},
      {"subtree",
       {1, {}, true,
        [](Evaluator& ev, const Args& a) {
          return NodeQuery(ev, a[0], "subtree", [](const Tree& t, NodeId o) {
            return Value::OfTree(Subtree(t, o));
          });
        }}},
      {"context",
       {2, {}, true,
        [](Evaluator& ev, const Args& a) {
          auto o1 = ev.NodeOf(a[0], "context");
          auto o2 = ev.NodeOf(a[1], "context");
          if (!o1 || !o2) return Value();
          return Value::OfTree(ContextOf(ev.SelfTree(), *o1, *o2).tree());
        }}},
      {"root",
       {0, {}, true,
        [](Evaluator& ev, const Args&) {
          ev.SelfTree();
          return Value::Node({});
        }}},
      {"label",
       {1, {}, true,
        [](Evaluator& ev, const Args& a) {
          return NodeQuery(ev, a[0], "label", [](const Tree& t, NodeId o) {
            return Value::Label(t.label(o));
          });
        }}},
      {"has_label",
       {2, {1}, true,
        [](Evaluator& ev, const Args& a) {
          std::string l = LabelArg(a[1], "has_label");
          auto o = ev.NodeOf(a[0], "has_label");
          return Value::Bool(o && ev.SelfTree().label(*o) == l);
        }}},
      {"child",
       {2, {}, true,
        [](Evaluator& ev, const Args& a) {
          auto o1 = ev.NodeOf(a[0], "child");
          auto o2 = ev.NodeOf(a[1], "child");
          return Value::Bool(o1 && o2 && ev.SelfTree().parent(*o2) == *o1);
        }}},
      {"next_sibling",
       {2, {}, true,
        [](Evaluator& ev, const Args& a) {
          auto o1 = ev.NodeOf(a[0], "next_sibling");
          auto o2 = ev.NodeOf(a[1], "next_sibling");
          if (!o1 || !o2) return Value::False();
          const Tree& t = ev.SelfTree();
          return Value::Bool(*o1 != t.root() && *o2 != t.root() &&
                             t.parent(*o1) == t.parent(*o2) &&
                             t.sibling_index(*o1) + 1 == t.sibling_index(*o2));
        }}},
      {"parent",
       {1, {}, true,
        [](Evaluator& ev, const Args& a) {
          return NodeQuery(ev, a[0], "parent", [&](const Tree& t, NodeId o) {
            auto p = t.parent(o);
            return p ? ev.NodeValue(*p) : Value();
          });
        }}},
      {"value",
       {1, {}, true,
        [](Evaluator& ev, const Args& a) {
          return NodeQuery(ev, a[0], "value", [](const Tree& t, NodeId o) {
            return t.value(o);
          });
        }}},
      {"child_at",
       {2, {}, true,
        [](Evaluator& ev, const Args& a) {
          std::uint64_t i = NatArg(a[1], "child_at");
          return NodeQuery(ev, a[0], "child_at", [&](const Tree& t, NodeId o) {
            auto ch = t.children(o);
            if (i == 0 || i > ch.size()) return Value();
            return ev.NodeValue(ch[i - 1]);
          });
        }}},
      {"sibling_index",
       {1, {}, true,
        [](Evaluator& ev, const Args& a) {
          return NodeQuery(ev, a[0], "sibling_index",
                           [](const Tree& t, NodeId o) {
                             return Value::NatV(t.sibling_index(o) + 1);
                           });
        }}},
      {"depth",
       {1, {}, true,
        [](Evaluator& ev, const Args& a) {
          return NodeQuery(ev, a[0], "depth", [](const Tree& t, NodeId o) {
            return Value::NatV(t.depth(o));
          });
        }}},
      {"node_at",
       {3, {}, true,
        [](Evaluator& ev, const Args& a) {
          return NodeAt(ev.SelfTree(), NatArg(a[0], "node_at"),
                        NatArg(a[1], "node_at"), NatArg(a[2], "node_at"));
        }}},
      {"newfunc",
       {0, {}, true,
        [](Evaluator& ev, const Args&) {
          return Value::Symbol(ev.NewName());
        }}},
  };
  return *table;
}

void CheckBijection(const State& state, const Renaming& sigma) {
  std::set<Value> image;
  for (const auto& [from, to] : sigma) {
    if (!state.base().contains(from)) {
      throw IsoError("renaming maps " + ToString(from) +
                     " outside the base set");
    }
    if (!state.base().contains(to)) {
      throw IsoError("renaming maps into " + ToString(to) +
                     " outside the base set");
    }
  }
  for (const Value& v : state.base()) {
    auto it = sigma.find(v);
    if (!image.insert(it == sigma.end() ? v : it->second).second) {
      throw IsoError("renaming is not injective");
    }
  }
}

Tree RenameTree(const Tree& t, const Renaming& sigma) {
  Tree::Builder b;
  std::function<void(NodeId, std::optional<NodeId>)> copy =
      [&](NodeId o, std::optional<NodeId> parent) {
        NodeId id = b.Open(t.label(o), ApplyRenaming(t.value(o), sigma), parent);
        for (NodeId c : t.children(o)) copy(c, id);
      };
  copy(t.root(), std::nullopt);
  return std::move(b).Finish();
}

}  // namespace

Value NodeAt(const Tree& self, std::uint64_t k, std::uint64_t l,
             std::uint64_t occurrence) {
  auto rule = self.Find({1});
  if (!rule) return Value();
  std::uint64_t seen = 0;
  std::uint32_t base = self.depth(*rule);
  std::function<std::optional<NodeId>(NodeId)> walk =
      [&](NodeId o) -> std::optional<NodeId> {
    if (self.depth(o) - base == k && self.sibling_index(o) == l) {
      if (seen++ == occurrence) return o;
    }
    for (NodeId c : self.children(o)) {
      if (auto r = walk(c)) return r;
    }
    return std::nullopt;
  };
  auto o = walk(*rule);
  return o ? Value::Node(self.PathOf(*o)) : Value();
}

Value EvalTerm(const State& state, const Term& term, const Env& env,
               ReserveAllocator* reserve) {
  Evaluator ev(state, reserve);
  Env local = env;
  return ev.Eval(term, local);
}

Value EvalHead(const State& state, const Term& head, const Env& env,
               ReserveAllocator* reserve) {
  Evaluator ev(state, reserve);
  Env local = env;
  return ev.Head(head, local);
}

bool IsBuiltin(const std::string& name) { return Builtins().contains(name); }

bool IsLabelArgument(const std::string& builtin, std::size_t position) {
  auto it = Builtins().find(builtin);
  if (it == Builtins().end()) return false;
  const auto& l = it->second.labels;
  return std::find(l.begin(), l.end(), position) != l.end();
}

std::vector<std::string> BuiltinNames() {
  std::vector<std::string> out;
  for (const auto& [name, b] : Builtins()) out.push_back(name);
  return out;
}

bool IsConsistent(const UpdateSet& delta) {
  const Location* prev = nullptr;
  for (const Update& u : delta) {
    if (prev && *prev == u.location) return false;
    prev = &u.location;
  }
  return true;
}

State ApplyUpdateSet(const State& state, const UpdateSet& delta) {
  for (const Update& u : delta) {
    if (u.location.is_sublocation()) {
      throw StateError("unnormalized sublocation update at " +
                       ToString(u.location));
    }
  }
  if (!IsConsistent(delta)) return state;
  State next = state;
  for (const Update& u : delta) next.Set(u.location, u.value);
  return next;
}

UpdateSet DiffStates(const State& s1, const State& s2) {
  if (s1.base() != s2.base()) throw StateError("standard base sets differ");
  if (!s2.signature().Includes(s1.signature())) {
    throw StateError("second signature does not include the first");
  }
  UpdateSet out;
  for (const auto& [loc, v] : s2.interp()) {
    if (s1.Get(loc) != v) out.insert(Update{loc, v});
  }
  for (const auto& [loc, v] : s1.interp()) {
    if (!s2.interp().contains(loc)) out.insert(Update{loc, Value()});
  }
  return out;
}

Value ApplyRenaming(const Value& v, const Renaming& sigma) {
  switch (v.kind()) {
    case Value::Kind::kAtom: {
      auto it = sigma.find(v);
      return it == sigma.end() ? v : it->second;
    }
    case Value::Kind::kTerm:
      return Value::OfTerm(MapConstants(v.as_term(), [&](const Value& c) {
        return ApplyRenaming(c, sigma);
      }));
    case Value::Kind::kTree:
      return Value::OfTree(RenameTree(v.as_tree(), sigma));
    case Value::Kind::kHedge: {
      Hedge h;
      for (const Tree& t : v.as_hedge()) h.push_back(RenameTree(t, sigma));
      return Value::OfHedge(std::move(h));
    }
    case Value::Kind::kTuple: {
      std::vector<Value> items;
      for (const Value& x : v.as_tuple()) {
        items.push_back(ApplyRenaming(x, sigma));
      }
      return Value::OfTuple(std::move(items));
    }
    case Value::Kind::kSet: {
      std::vector<Value> items;
      for (const Value& x : v.as_set()) {
        items.push_back(ApplyRenaming(x, sigma));
      }
      return Value::OfSet(std::move(items));
    }
    default:
      return v;
  }
}

UpdateSet ApplyRenaming(const UpdateSet& delta, const Renaming& sigma) {
  UpdateSet out;
  for (const Update& u : delta) {
    Location loc = u.location;
    for (Value& a : loc.args) a = ApplyRenaming(a, sigma);
    out.insert(Update{std::move(loc), ApplyRenaming(u.value, sigma)});
  }
  return out;
}

State ApplyIsomorphism(const State& state, const Renaming& sigma) {
  CheckBijection(state, sigma);
  Background bg;
  for (const auto& [name, elems] : state.background().domains) {
    std::vector<Value> renamed;
    for (const Value& e : elems) renamed.push_back(ApplyRenaming(e, sigma));
    std::sort(renamed.begin(), renamed.end());
    bg.domains[name] = std::move(renamed);
  }
  State out(state.signature(), state.base(), std::move(bg));
  for (const auto& [loc, v] : state.interp()) {
    Location l = loc;
    for (Value& a : l.args) a = ApplyRenaming(a, sigma);
    out.Set(l, ApplyRenaming(v, sigma));
  }
  return out;
}

}  // namespace rsasm
