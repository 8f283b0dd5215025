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

#include "rsasm/random_program.h"

#include <algorithm>
#include <functional>

#include "rsasm/reflect.h"
#include "rsasm/treealg.h"

namespace rsasm::gen {
namespace {

const char* const kLabels[] = {"a", "b", "c", "d"};
const char* const kAtoms[] = {"a", "b", "c"};
constexpr std::uint64_t kMaxNat = 3;

Value RandomAtom(Rng& rng) { return Value::AtomV(kAtoms[Uniform(rng, 0, 2)]); }
Value RandomNat(Rng& rng) { return Value::NatV(Uniform(rng, 0, kMaxNat)); }

Value RandomLeafValue(Rng& rng) {
  return Chance(rng, 0.5) ? RandomNat(rng) : RandomAtom(rng);
}

void BuildTree(Rng& rng, std::size_t budget, bool with_values,
               Tree::Builder& b, std::optional<NodeId> parent) {
  std::string label = kLabels[Uniform(rng, 0, 3)];
  if (budget <= 1) {
    Value v = with_values && Chance(rng, 0.5) ? RandomLeafValue(rng) : Value();
    b.Open(label, v, parent);
    return;
  }
  NodeId id = b.Open(label, Value(), parent);
  std::size_t rest = budget - 1;
  std::size_t kids = Uniform(rng, 1, std::min<std::size_t>(rest, 3));
  for (std::size_t i = 0; i < kids; ++i) {
    std::size_t left = kids - i - 1;
    std::size_t share = i + 1 == kids ? rest : Uniform(rng, 1, rest - left);
    BuildTree(rng, share, with_values, b, id);
    rest -= share;
  }
}

enum class Type { kAtom, kNat };

class RuleGen {
 public:
  RuleGen(Rng& rng, const World& world) : rng_(rng), world_(world) {}

  RulePtr Top(int depth) {
    std::vector<RulePtr> rs;
    std::size_t k = Uniform(rng_, 1, 3);
    for (std::size_t i = 0; i < k; ++i) rs.push_back(Rule(depth));
    return rule::Par(std::move(rs));
  }

 private:
  std::uint64_t Pick(std::uint64_t n) { return Uniform(rng_, 0, n - 1); }

  std::string Fresh() { return "v" + std::to_string(next_var_++); }

  TermPtr Atom(int depth) {
    std::vector<TermPtr> vars = Vars(Type::kAtom);
    switch (Pick(depth > 0 ? 7 : 3)) {
      case 0:
        return term::Const(RandomAtom(rng_));
      case 1:
        return term::App(Pick(2) ? "c0" : "c1");
      case 2:
        if (!vars.empty()) return vars[Pick(vars.size())];
        return term::App("mode");
      case 3:
        return term::App("f", {Atom(depth - 1)});
      case 4:
        return term::App("h", {Atom(depth - 1), Atom(depth - 1)});
      case 5: {
        std::string x = Fresh();
        bound_.push_back({x, Type::kAtom});
        TermPtr cond = Bool(depth - 1);
        bound_.pop_back();
        return term::Iota(x, "D", cond);
      }
      default:
        return term::App("f", {term::Const(RandomAtom(rng_))});
    }
  }

  TermPtr Nat(int depth) {
    std::vector<TermPtr> vars = Vars(Type::kNat);
    switch (Pick(depth > 0 ? 6 : 3)) {
      case 0:
        return term::Const(RandomNat(rng_));
      case 1:
        return term::App("n");
      case 2:
        if (!vars.empty()) return vars[Pick(vars.size())];
        return term::App("g", {term::Const(RandomAtom(rng_))});
      case 3:
        return term::App("g", {Atom(depth - 1)});
      case 4:
        return term::App("plus", {Nat(depth - 1), Nat(depth - 1)});
      default: {
        std::string x = Fresh();
        bound_.push_back({x, Type::kAtom});
        TermPtr cond = Bool(depth - 1);
        bound_.pop_back();
        return term::App("card", {term::SetOf(x, "D", cond)});
      }
    }
  }

  TermPtr Bool(int depth) {
    switch (Pick(depth > 0 ? 6 : 2)) {
      case 0:
        return term::Eq(Atom(depth - 1), Atom(depth - 1));
      case 1:
        return term::Eq(Nat(depth - 1), Nat(depth - 1));
      case 2:
        return term::Not(Bool(depth - 1));
      case 3:
        return term::And({Bool(depth - 1), Bool(depth - 1)});
      case 4:
        return term::Or({Bool(depth - 1), Bool(depth - 1)});
      default: {
        std::string x = Fresh();
        bound_.push_back({x, Type::kAtom});
        TermPtr cond = Bool(depth - 1);
        bound_.pop_back();
        return term::Exists(x, "D", cond);
      }
    }
  }

  std::vector<TermPtr> Vars(Type type) const {
    std::vector<TermPtr> out;
    for (const auto& [name, t] : bound_) {
      if (t == type) out.push_back(term::Var(name));
    }
    return out;
  }

  // rule<update<func(c0), term(()), term((atom))>> as a tree literal.
  TermPtr PlantedRule() {
    auto leaf = [](const char* l, TermPtr v) { return term::TreeLit(l, v, {}); };
    TermPtr update = term::TreeLit(
        label::kUpdate, nullptr,
        {leaf(label::kFunc, term::Const(Value::Symbol(Pick(2) ? "c0" : "c1"))),
         leaf(label::kTerm, term::App("tuple", {})),
         leaf(label::kTerm,
              term::App("tuple", {term::Const(RandomAtom(rng_))}))});
    return term::TreeLit(label::kRule, nullptr, {update});
  }

  // The top-level PAR of the stored rule, found by reading self only.
  TermPtr TopParLocator() {
    std::string p = Fresh();
    return term::Iota(
        p, kSelfDomain,
        term::And({term::App("has_label", {term::Var(p),
                                           term::Const(Value::Label("par"))}),
                   term::Eq(term::App("depth", {term::Var(p)}),
                            term::Const(Value::NatV(2)))}));
  }

  RulePtr SelfRule() {
    switch (Pick(3)) {
      case 0:
        return rule::Partial(term::Subloc({1, 0}), {}, "right_extend",
                             {PlantedRule()});
      case 1:
        return rule::Partial(term::Raise(TopParLocator()), {}, "right_extend",
                             {PlantedRule()});
      default: {
        std::string o = Fresh();
        TermPtr loc = TopParLocator();
        return rule::Let(o, loc,
                         rule::Partial(term::Var(o), {}, "right_extend",
                                       {PlantedRule()}));
      }
    }
  }

  RulePtr Leaf() {
    switch (Pick(9)) {
      case 0:
        return rule::Assign(Pick(2) ? "c0" : "c1", {}, Atom(2));
      case 1:
        return rule::Assign("f", {Atom(1)}, Atom(2));
      case 2:
        return rule::Assign("h", {Atom(1), Atom(1)}, Atom(1));
      case 3:
        return rule::Assign("n", {}, Nat(2));
      case 4:
        return rule::Assign("g", {Atom(1)}, Nat(2));
      case 5:
        return rule::Partial("n", {}, "+", {Nat(2)});
      case 6:
        return rule::Partial("g", {Atom(1)}, "+", {Nat(2)});
      case 7:
        return rule::Assign("mode", {}, Atom(1));
      default:
        return SelfRule();
    }
  }

  RulePtr Rule(int depth) {
    if (depth <= 0) return Leaf();
    switch (Pick(6)) {
      case 0:
      case 1:
        return Leaf();
      case 2:
        return rule::If(Bool(2), Rule(depth - 1), Rule(depth - 1));
      case 3: {
        std::vector<RulePtr> rs;
        std::size_t k = Uniform(rng_, 0, 3);
        for (std::size_t i = 0; i < k; ++i) rs.push_back(Rule(depth - 1));
        return rule::Par(std::move(rs));
      }
      default: {
        std::string x = Fresh();
        Type t = Pick(2) ? Type::kAtom : Type::kNat;
        TermPtr v = t == Type::kAtom ? Atom(2) : Nat(2);
        bound_.push_back({x, t});
        RulePtr body = Rule(depth - 1);
        bound_.pop_back();
        return rule::Let(x, v, body);
      }
    }
  }

  Rng& rng_;
  const World& world_;
  std::vector<std::pair<std::string, Type>> bound_;
  int next_var_ = 0;
};

// Every non-self location of the world with a generator for its values.
struct Slot {
  Location location;
  bool nat;
};

std::vector<Slot> Slots() {
  std::vector<Slot> out;
  auto atom = [](const char* s) { return Value::AtomV(s); };
  for (const char* f : {"c0", "c1", "mode"}) out.push_back({{f, {}, {}}, false});
  out.push_back({{"n", {}, {}}, true});
  for (const char* x : kAtoms) {
    out.push_back({{"f", {atom(x)}, {}}, false});
    out.push_back({{"g", {atom(x)}, {}}, true});
    out.push_back({{"junk", {atom(x)}, {}}, false});
    for (const char* y : kAtoms) {
      out.push_back({{"h", {atom(x), atom(y)}, {}}, false});
    }
  }
  return out;
}

Value SlotValue(Rng& rng, const Slot& s) {
  if (Chance(rng, 0.1)) return Value();
  return s.nat ? RandomNat(rng) : RandomAtom(rng);
}

}  // namespace

std::uint64_t Uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

bool Chance(Rng& rng, double p) {
  return std::bernoulli_distribution(p)(rng);
}

Tree RandomTree(Rng& rng, std::size_t max_nodes, bool with_values) {
  Tree::Builder b;
  BuildTree(rng, Uniform(rng, 1, std::max<std::size_t>(max_nodes, 1)),
            with_values, b, std::nullopt);
  return std::move(b).Finish();
}

Context RandomContext(Rng& rng, std::size_t max_nodes) {
  Tree t = RandomTree(rng, max_nodes, true);
  NodeId o = static_cast<NodeId>(Uniform(rng, 0, t.size() - 1));
  if (o == t.root()) return Context::Trivial();
  return SubstTC(t, o);
}

Hedge RandomHedge(Rng& rng, std::size_t max_trees, std::size_t max_nodes) {
  Hedge h;
  std::size_t k = Uniform(rng, 0, max_trees);
  for (std::size_t i = 0; i < k; ++i) h.push_back(RandomTree(rng, max_nodes));
  return h;
}

const World& ProbeWorld() {
  static const World* world = [] {
    auto* w = new World;
    w->signature = Signature({{kSelf, 0},
                              {"c0", 0},
                              {"c1", 0},
                              {"n", 0},
                              {"mode", 0},
                              {"f", 1},
                              {"g", 1},
                              {"h", 2},
                              {"junk", 1}});
    std::vector<Value> d;
    for (const char* x : kAtoms) {
      d.push_back(Value::AtomV(x));
      w->base.insert(Value::AtomV(x));
    }
    w->background.domains["D"] = d;
    return w;
  }();
  return *world;
}

RulePtr RandomRule(Rng& rng, const World& world, int depth) {
  return RuleGen(rng, world).Top(depth);
}

State RandomState(Rng& rng, const World& world, const Rule& rule) {
  State s(world.signature, world.base, world.background);
  s.Set(Location::Self(), Value::OfTree(EncodeSelf(world.signature, rule)));
  for (const Slot& slot : Slots()) s.Set(slot.location, SlotValue(rng, slot));
  return s;
}

State Perturb(Rng& rng, const State& state, const World&) {
  static const std::vector<Slot> slots = Slots();
  State s = state;
  std::size_t changes = Uniform(rng, 0, 2);
  for (std::size_t i = 0; i < changes; ++i) {
    const Slot& slot = slots[Uniform(rng, 0, slots.size() - 1)];
    s.Set(slot.location, SlotValue(rng, slot));
  }
  return s;
}

Renaming RandomRenaming(Rng& rng, const std::set<Value>& base) {
  std::vector<Value> from(base.begin(), base.end());
  std::vector<Value> to = from;
  std::shuffle(to.begin(), to.end(), rng);
  Renaming sigma;
  for (std::size_t i = 0; i < from.size(); ++i) sigma[from[i]] = to[i];
  return sigma;
}

Tree RandomSelfTree(Rng& rng, const World& world, int depth) {
  return EncodeSelf(world.signature, *RandomRule(rng, world, depth));
}

}  // namespace rsasm::gen
