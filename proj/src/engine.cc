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

#include "rsasm/engine.h"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>

#include "rsasm/error.h"
#include "rsasm/printer.h"
#include "rsasm/reflect.h"
#include "rsasm/structures.h"

namespace rsasm {
namespace {

std::shared_ptr<const Tree> SelfTreeOf(const State& state) {
  Value v = state.GetSelf();
  if (v.kind() != Value::Kind::kTree) {
    throw ReflectError("self does not hold a tree");
  }
  return v.tree_ptr();
}

void CheckApp(const Term& t, const Signature& sig) {
  Walk(t, [&](const Term& x) {
    if (x.kind != Term::Kind::kApp) return;
    if (auto arity = sig.ArityOf(x.name)) {
      if (*arity != x.args.size()) {
        throw SignatureError(x.name + " expects " + std::to_string(*arity) +
                             " arguments, got " +
                             std::to_string(x.args.size()));
      }
      return;
    }
    if (!IsBuiltin(x.name)) throw SignatureError("unknown function " + x.name);
  });
}

void CheckTarget(const Rule& r, const Signature& sig) {
  if (r.head->kind != Term::Kind::kSym) return;
  auto arity = sig.ArityOf(r.head->name);
  if (!arity) throw SignatureError("unknown target " + r.head->name);
  if (*arity != r.args.size()) {
    throw SignatureError(r.head->name + " expects " + std::to_string(*arity) +
                         " arguments, got " + std::to_string(r.args.size()));
  }
}

std::vector<FunctionSymbol> Added(const Signature& before,
                                  const Signature& after) {
  std::vector<FunctionSymbol> out;
  for (const auto& f : after.symbols()) {
    if (!before.Contains(f.name)) out.push_back(f);
  }
  return out;
}

// Value of a term, or the error it raised.
struct Outcome {
  bool error = false;
  Value value;

  bool operator==(const Outcome& o) const {
    return error == o.error && (error || value == o.value);
  }
};

Outcome Evaluate(const State& s, const Term& t) {
  try {
    return {false, EvalTerm(s, t)};
  } catch (const Error&) {
    return {true, Value()};
  }
}

// β of a value that encodes a rule, directly or as the rule part of self.
std::optional<std::vector<TermPtr>> BetaOfValue(const Value& v) {
  if (v.kind() != Value::Kind::kTree) return std::nullopt;
  const Tree& t = v.as_tree();
  try {
    if (t.label(t.root()) == label::kSelf) return Beta(RuleOfSelfByScan(t));
    return Beta(t);
  } catch (const Error&) {
    return std::nullopt;
  }
}

struct TermLess {
  bool operator()(const TermPtr& a, const TermPtr& b) const {
    return Compare(*a, *b) < 0;
  }
};
using TermSet = std::set<TermPtr, TermLess>;

// Appends the distinct ground subterms of `t` to `out`, skipping subterms
// already in `seen`. Returns the free variables of `t`.
std::set<std::string> CollectGround(const TermPtr& t, TermSet& seen,
                                    std::vector<TermPtr>& out) {
  if (seen.count(t)) return {};
  std::set<std::string> free;
  if (t->kind == Term::Kind::kVar) free.insert(t->name);
  for (const auto& a : t->args) {
    auto f = CollectGround(a, seen, out);
    free.insert(f.begin(), f.end());
  }
  if (t->leaf) {
    auto f = CollectGround(t->leaf, seen, out);
    free.insert(f.begin(), f.end());
  }
  if (t->kind == Term::Kind::kIota || t->kind == Term::Kind::kExists ||
      t->kind == Term::Kind::kSetOf) {
    free.erase(t->name);
  }
  if (free.empty()) {
    seen.insert(t);
    out.push_back(t);
  }
  return free;
}

// Evaluates ground terms with memoization: a term's ground children are
// evaluated first and passed in as constants, so each distinct subterm is
// evaluated once per state.
class GroundEvaluator {
 public:
  explicit GroundEvaluator(const State& s) : s_(s) {}

  Outcome Eval(const TermPtr& t) {
    auto it = memo_.find(t);
    if (it != memo_.end()) return it->second;
    Outcome out = Compute(t);
    memo_.emplace(t, out);
    return out;
  }

 private:
  Outcome Compute(const TermPtr& t) {
    switch (t->kind) {
      case Term::Kind::kDrop:
      case Term::Kind::kIota:
      case Term::Kind::kExists:
      case Term::Kind::kSetOf:
        return Evaluate(s_, *t);
      default:
        break;
    }
    if (t->args.empty() && !t->leaf) return Evaluate(s_, *t);
    Term copy = *t;
    for (std::size_t i = 0; i < copy.args.size(); ++i) {
      if (t->kind == Term::Kind::kApply && i == 0) continue;
      Outcome o = Eval(t->args[i]);
      if (o.error) return o;
      copy.args[i] = term::Const(o.value);
    }
    if (t->leaf) {
      Outcome o = Eval(t->leaf);
      if (o.error) return o;
      copy.leaf = term::Const(o.value);
    }
    return Evaluate(s_, copy);
  }

  const State& s_;
  std::map<TermPtr, Outcome, TermLess> memo_;
};

}  // namespace

std::uint64_t DefaultMaxSteps() {
  if (const char* env = std::getenv("RSASM_MAX_STEPS")) {
    char* end = nullptr;
    unsigned long long n = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return n;
  }
  return kDefaultMaxSteps;
}

const char* ToString(RunStatus status) {
  switch (status) {
    case RunStatus::kFixpoint: return "fixpoint";
    case RunStatus::kMaxSteps: return "max_steps";
    case RunStatus::kError: return "error";
  }
  return "error";
}

void ValidateRule(const Rule& r, const Signature& sig) {
  WalkTerms(r, [&](const Term& t) { CheckApp(t, sig); });
  std::function<void(const Rule&)> targets = [&](const Rule& x) {
    if (x.kind == Rule::Kind::kAssign || x.kind == Rule::Kind::kPartial) {
      CheckTarget(x, sig);
    }
    for (const auto& b : x.body) targets(*b);
  };
  targets(r);
}

const Decoder::Decoded& Decoder::Decode(const State& state) {
  auto self = SelfTreeOf(state);
  if (decoded_ && last_ == self) return *decoded_;
  CheckSelfShape(*self);
  Decoded d{DecodeRule(RuleOfSelf(*self)),
            DecodeSignature(SignatureOfSelf(*self))};
  last_ = self;
  decoded_ = std::move(d);
  return *decoded_;
}

State WithDecodedSignature(const State& state) {
  Decoder d;
  State s = state;
  s.set_signature(d.Decode(state).signature);
  return s;
}

std::pair<State, StepRecord> Step(const State& state, Decoder& decoder) {
  const auto& decoded = decoder.Decode(state);
  RulePtr rule = decoded.rule;
  State current = state;
  current.set_signature(decoded.signature);
  ValidateRule(*rule, current.signature());

  StepRecord rec;
  rec.state = current;
  rec.self_digest = Digest(*SelfTreeOf(current));
  rec.rule_text = frontend::PrintRule(*rule, 0);

  ReserveAllocator reserve(current.signature());
  Execution ex = Execute(*rule, current, &reserve);
  rec.multiset = std::move(ex.multiset);
  rec.collapsed = std::move(ex.collapsed);
  if (!rec.collapsed.ok()) return {current, std::move(rec)};

  State next = ApplyUpdateSet(current, rec.collapsed.updates);
  const Signature& after = decoder.Decode(next).signature;
  if (!after.Includes(current.signature())) {
    throw SignatureError("step " + std::to_string(rec.index) +
                         " removed a function symbol from the signature");
  }
  rec.signature_added = Added(current.signature(), after);
  next.set_signature(after);
  return {std::move(next), std::move(rec)};
}

std::pair<State, StepRecord> Step(const State& state) {
  Decoder d;
  return Step(state, d);
}

Trace Run(const Machine& machine) {
  Trace trace;
  Decoder decoder;
  State state = machine.initial;
  for (std::uint64_t i = 0;; ++i) {
    if (i >= machine.max_steps) {
      trace.status = RunStatus::kMaxSteps;
      break;
    }
    try {
      auto [next, rec] = Step(state, decoder);
      rec.index = i;
      bool halt = rec.collapsed.updates.empty() || !rec.collapsed.ok();
      trace.steps.push_back(std::move(rec));
      state = std::move(next);
      if (halt) {
        trace.status = RunStatus::kFixpoint;
        break;
      }
    } catch (const Error& e) {
      trace.status = RunStatus::kError;
      trace.error = e.what();
      break;
    }
  }
  trace.final_state = std::move(state);
  return trace;
}

Json StepToJson(const StepRecord& step) {
  Json updates = Json::array();
  for (const auto& u : step.collapsed.updates) updates.push_back(ToJson(u));
  Json shared = Json::array();
  for (const auto& e : Canonical(step.multiset)) {
    if (std::holds_alternative<SharedUpdate>(e)) shared.push_back(ToJson(e));
  }
  Json multiset = Json::array();
  for (const auto& e : Canonical(step.multiset)) multiset.push_back(ToJson(e));
  Json added = Json::array();
  for (const auto& f : step.signature_added) {
    added.push_back({{"name", f.name}, {"arity", f.arity}});
  }
  Json j{{"index", step.index},
         {"state", ToJson(step.state)},
         {"updates", std::move(updates)},
         {"shared", std::move(shared)},
         {"multiset", std::move(multiset)},
         {"rule", step.rule_text},
         {"signature_added", std::move(added)},
         {"self_digest", step.self_digest}};
  if (step.collapsed.clash) {
    j["clash"] = {{"location", ToJson(step.collapsed.clash->location)},
                  {"reason", step.collapsed.clash->reason}};
  }
  return j;
}

Json TraceToJson(const Trace& trace) {
  Json steps = Json::array();
  for (const auto& s : trace.steps) steps.push_back(StepToJson(s));
  Json j{{"steps", std::move(steps)},
         {"status", ToString(trace.status)},
         {"final", ToJson(trace.final_state)}};
  if (!trace.error.empty()) j["error"] = trace.error;
  return j;
}

bool CheckStrongCoincidence(const State& s1, const State& s2,
                            const std::vector<TermPtr>& w,
                            bool subterm_closed) {
  for (const auto& t : w) {
    Outcome a = Evaluate(s1, *t);
    Outcome b = Evaluate(s2, *t);
    if (!(a == b)) return false;
    if (a.error) continue;
    auto beta = BetaOfValue(a.value);
    if (!beta) continue;
    std::vector<TermPtr> checked;
    if (subterm_closed) {
      TermSet seen;
      for (const auto& bt : *beta) CollectGround(bt, seen, checked);
    } else {
      checked = *beta;
    }
    GroundEvaluator e1(s1), e2(s2);
    for (const auto& x : checked) {
      if (!(e1.Eval(x) == e2.Eval(x))) return false;
    }
  }
  return true;
}

}  // namespace rsasm
