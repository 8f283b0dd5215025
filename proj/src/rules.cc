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

#include "rsasm/rules.h"

#include <algorithm>
#include <map>
#include <numeric>

#include "rsasm/error.h"
#include "rsasm/operators.h"
#include "rsasm/tree.h"
#include "rsasm/treealg.h"

namespace rsasm {
namespace {

template <typename T>
std::strong_ordering CompareSeq(const std::vector<T>& a,
                                const std::vector<T>& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return a.size() <=> b.size();
}

class Collector {
 public:
  Collector(const State& state, ReserveAllocator* reserve)
      : state_(state), reserve_(reserve) {}

  void Run(const Rule& r, Env& env, UpdateMultiset& out) {
    switch (r.kind) {
      case Rule::Kind::kAssign:
        out.push_back(Update{Target(r, env), Eval(*r.rhs, env)});
        return;
      case Rule::Kind::kPartial: {
        if (!FindOperator(r.op) || r.op == kAssignOp) {
          throw RuleError("unknown shared-update operator " + r.op);
        }
        Location loc = Target(r, env);
        std::vector<Value> args;
        for (const auto& t : r.operands) args.push_back(Eval(*t, env));
        out.push_back(SharedUpdate{std::move(loc), r.op, std::move(args), {}});
        return;
      }
      case Rule::Kind::kIf: {
        Value c = Eval(*r.rhs, env);
        if (!c.is_bool()) {
          throw RuleError(std::string("branch condition is ") +
                          KindName(c.kind()) + ", not Boolean");
        }
        Run(*r.body[c.as_bool() ? 0 : 1], env, out);
        return;
      }
      case Rule::Kind::kPar:
        for (const auto& b : r.body) Run(*b, env, out);
        return;
      case Rule::Kind::kLet: {
        Value v = Eval(*r.rhs, env);
        auto prev = env.find(r.var);
        std::optional<Value> saved;
        if (prev != env.end()) saved = prev->second;
        env[r.var] = std::move(v);
        Run(*r.body[0], env, out);
        if (saved) {
          env[r.var] = *saved;
        } else {
          env.erase(r.var);
        }
        return;
      }
    }
  }

 private:
  Value Eval(const Term& t, const Env& env) {
    return EvalTerm(state_, t, env, reserve_);
  }

  Location Target(const Rule& r, const Env& env) {
    Value h = EvalHead(state_, *r.head, env, reserve_);
    std::vector<Value> args;
    for (const auto& t : r.args) args.push_back(Eval(*t, env));
    if (h.kind() == Value::Kind::kNode) {
      if (!args.empty()) throw SignatureError("sublocations are nullary");
      Value self = state_.GetSelf();
      if (self.kind() != Value::Kind::kTree ||
          !self.as_tree().Find(h.as_node())) {
        throw RuleError("target node does not exist in self");
      }
      if (h.as_node().empty()) return Location::Self();
      return Location{kSelf, {}, h.as_node()};
    }
    if (h.kind() != Value::Kind::kSymbol) {
      throw RuleError("assignment target is undefined");
    }
    const std::string& f = h.as_symbol();
    auto arity = state_.signature().ArityOf(f);
    if (!arity) throw SignatureError("unknown function symbol " + f);
    if (*arity != args.size()) {
      throw SignatureError(f + " expects " + std::to_string(*arity) +
                           " arguments, got " + std::to_string(args.size()));
    }
    return Location{f, std::move(args), {}};
  }

  const State& state_;
  ReserveAllocator* reserve_;
};

bool IsPrefix(const Path& a, const Path& b) {
  return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

Value ApplyShared(const Value& current, const SharedUpdate& s) {
  if (!s.splice) return ApplyOperator(s.op, current, s.args);
  if (current.kind() != Value::Kind::kTree) {
    throw TreeError("splice into a non-tree value");
  }
  const Tree& t = current.as_tree();
  auto o = t.Find(*s.splice);
  if (!o) throw TreeError("splice path left the tree");
  Value sub = s.splice->empty() ? current : Value::OfTree(Subtree(t, *o));
  Value replaced = ApplyOperator(s.op, sub, s.args);
  if (replaced.kind() != Value::Kind::kTree) {
    throw TreeError("splice result is not a tree");
  }
  return Value::OfTree(ReplaceNode(t, *o, {replaced.as_tree()}));
}

// op1(op2(...opk(current, args_k)..., args_2), args_1) for the order given.
Value Fold(const Value& current, const std::vector<const SharedUpdate*>& seq) {
  Value v = current;
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) v = ApplyShared(v, **it);
  return v;
}

bool AllIdentical(const std::vector<const SharedUpdate*>& g) {
  return std::all_of(g.begin(), g.end(),
                     [&](const SharedUpdate* s) { return *s == *g.front(); });
}

bool SameCommutativeOp(const std::vector<const SharedUpdate*>& g) {
  const SharedOperator* op = FindOperator(g.front()->op);
  if (!op || !op->commutative) return false;
  return std::all_of(g.begin(), g.end(), [&](const SharedUpdate* s) {
    return s->op == g.front()->op && s->splice == g.front()->splice;
  });
}

// Folds a group whose order might matter; nullopt when some order fails or
// two orders disagree.
std::optional<Value> FoldAllOrders(const Value& current,
                                   std::vector<const SharedUpdate*> g,
                                   std::string& reason) {
  if (g.size() > kMaxPermutationGroup) {
    reason = "too many order-dependent shared updates to check";
    return std::nullopt;
  }
  std::vector<std::size_t> idx(g.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::optional<Value> first;
  do {
    std::vector<const SharedUpdate*> seq;
    for (std::size_t i : idx) seq.push_back(g[i]);
    Value v;
    try {
      v = Fold(current, seq);
    } catch (const Error& e) {
      reason = std::string("an order of the shared updates fails: ") + e.what();
      return std::nullopt;
    }
    if (!first) {
      first = v;
    } else if (*first != v) {
      reason = "shared updates are incompatible";
      return std::nullopt;
    }
  } while (std::next_permutation(idx.begin(), idx.end()));
  return first;
}

std::optional<Value> FoldGroup(const Value& current,
                               const std::vector<const SharedUpdate*>& g,
                               std::string& reason) {
  if (g.size() == 1 || AllIdentical(g) || SameCommutativeOp(g)) {
    try {
      return Fold(current, g);
    } catch (const Error& e) {
      reason = e.what();
      return std::nullopt;
    }
  }
  // Partition by splice path; disjoint paths act independently.
  std::map<std::optional<Path>, std::vector<const SharedUpdate*>> by_path;
  for (const SharedUpdate* s : g) by_path[s->splice].push_back(s);
  bool disjoint = by_path.size() > 1;
  for (auto a = by_path.begin(); disjoint && a != by_path.end(); ++a) {
    for (auto b = std::next(a); b != by_path.end(); ++b) {
      if (!a->first || !b->first || IsPrefix(*a->first, *b->first) ||
          IsPrefix(*b->first, *a->first)) {
        disjoint = false;
        break;
      }
    }
  }
  if (!disjoint) return FoldAllOrders(current, g, reason);
  Value v = current;
  for (const auto& [path, members] : by_path) {
    std::optional<Value> next;
    if (members.size() == 1 || AllIdentical(members) ||
        SameCommutativeOp(members)) {
      try {
        next = Fold(v, members);
      } catch (const Error& e) {
        reason = e.what();
        return std::nullopt;
      }
    } else {
      next = FoldAllOrders(v, members, reason);
    }
    if (!next) return std::nullopt;
    v = std::move(*next);
  }
  return v;
}

}  // namespace

std::strong_ordering operator<=>(const SharedUpdate& a, const SharedUpdate& b) {
  if (auto c = a.location <=> b.location; c != 0) return c;
  if (auto c = a.op <=> b.op; c != 0) return c;
  if (auto c = CompareSeq(a.args, b.args); c != 0) return c;
  return a.splice <=> b.splice;
}

UpdateMultiset ComputeUpdateMultiset(const Rule& rule, const State& state,
                                     const Env& env,
                                     ReserveAllocator* reserve) {
  std::optional<ReserveAllocator> owned;
  if (!reserve) {
    owned.emplace(state.signature());
    reserve = &*owned;
  }
  Collector c(state, reserve);
  Env local = env;
  UpdateMultiset out;
  c.Run(rule, local, out);
  return out;
}

UpdateMultiset NormalizeSublocations(const UpdateMultiset& m) {
  UpdateMultiset out;
  out.reserve(m.size());
  for (const auto& e : m) {
    if (const auto* u = std::get_if<Update>(&e)) {
      if (!u->location.is_sublocation()) {
        out.push_back(*u);
        continue;
      }
      out.push_back(SharedUpdate{u->location.Root(), kAssignOp, {u->value},
                                 u->location.sub});
      continue;
    }
    const auto& s = std::get<SharedUpdate>(e);
    if (s.splice || s.location.symbol != kSelf) {
      out.push_back(s);
      continue;
    }
    out.push_back(SharedUpdate{s.location.Root(), s.op, s.args,
                               s.location.sub});
  }
  return out;
}

Collapsed Collapse(const UpdateMultiset& m, const State& state) {
  UpdateMultiset norm = NormalizeSublocations(m);
  struct Group {
    std::vector<Value> plain;
    std::vector<const SharedUpdate*> shared;
  };
  std::map<Location, Group> groups;
  for (const auto& e : norm) {
    if (const auto* u = std::get_if<Update>(&e)) {
      groups[u->location].plain.push_back(u->value);
    } else {
      const auto& s = std::get<SharedUpdate>(e);
      groups[s.location].shared.push_back(&s);
    }
  }
  Collapsed out;
  for (auto& [loc, g] : groups) {
    std::sort(g.plain.begin(), g.plain.end());
    g.plain.erase(std::unique(g.plain.begin(), g.plain.end()), g.plain.end());
    if (g.plain.size() > 1) {
      out.clash = ClashReport{loc, "conflicting values"};
      out.updates.clear();
      return out;
    }
    if (g.shared.empty()) {
      out.updates.insert(Update{loc, g.plain.front()});
      continue;
    }
    std::string reason;
    std::optional<Value> v = FoldGroup(state.Get(loc), g.shared, reason);
    if (!v) {
      out.clash = ClashReport{loc, reason};
      out.updates.clear();
      return out;
    }
    if (!g.plain.empty() && g.plain.front() != *v) {
      out.clash =
          ClashReport{loc, "plain and shared updates disagree"};
      out.updates.clear();
      return out;
    }
    out.updates.insert(Update{loc, std::move(*v)});
  }
  return out;
}

Execution Execute(const Rule& rule, const State& state,
                  ReserveAllocator* reserve) {
  Execution ex;
  ex.multiset = ComputeUpdateMultiset(rule, state, {}, reserve);
  ex.collapsed = Collapse(ex.multiset, state);
  return ex;
}

UpdateMultiset Canonical(UpdateMultiset m) {
  std::sort(m.begin(), m.end());
  return m;
}

std::string ToString(const MultisetEntry& e) {
  if (const auto* u = std::get_if<Update>(&e)) {
    return "(" + ToString(u->location) + ", " + ToString(u->value) + ")";
  }
  const auto& s = std::get<SharedUpdate>(e);
  std::string out = "(" + ToString(s.location) + ", " + s.op;
  if (s.splice) out += ToString(Location{"@", {}, *s.splice});
  out += ", (";
  for (std::size_t i = 0; i < s.args.size(); ++i) {
    if (i > 0) out += ", ";
    out += ToString(s.args[i]);
  }
  return out + "))";
}

}  // namespace rsasm
