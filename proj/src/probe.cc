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

#include "rsasm/probe.h"

#include <optional>

#include "rsasm/error.h"
#include "rsasm/printer.h"
#include "rsasm/random_program.h"
#include "rsasm/reflect.h"
#include "rsasm/rules.h"
#include "rsasm/serialize.h"
#include "rsasm/structures.h"

namespace rsasm {
namespace {

using gen::Rng;

constexpr std::size_t kMaxFindings = 5;

void Note(ProbeReport& r, std::string what) {
  if (r.findings.size() < kMaxFindings) r.findings.push_back(std::move(what));
}

// Changes up to two non-self locations to values already present in the
// state, or to undef.
State PerturbExisting(Rng& rng, const State& s) {
  std::vector<Location> locs;
  std::vector<Value> pool{Value()};
  for (const auto& [loc, v] : s.interp()) {
    if (loc.symbol == kSelf) continue;
    locs.push_back(loc);
    pool.push_back(v);
  }
  State out = s;
  if (locs.empty()) return out;
  std::size_t changes = gen::Uniform(rng, 0, 2);
  for (std::size_t i = 0; i < changes; ++i) {
    out.Set(locs[gen::Uniform(rng, 0, locs.size() - 1)],
            pool[gen::Uniform(rng, 0, pool.size() - 1)]);
  }
  return out;
}

State RandomWorldState(Rng& rng) {
  const auto& w = gen::ProbeWorld();
  return gen::RandomState(rng, w, *gen::RandomRule(rng, w));
}

// A random state: a perturbed fixture with probability 1/4 when there are
// fixtures, otherwise a generated program over the probe world.
State DrawState(Rng& rng, const std::vector<State>& fixtures) {
  if (!fixtures.empty() && gen::Chance(rng, 0.25)) {
    const State& f = fixtures[gen::Uniform(rng, 0, fixtures.size() - 1)];
    return WithDecodedSignature(PerturbExisting(rng, f));
  }
  return WithDecodedSignature(RandomWorldState(rng));
}

// The canonical update multiset, or the error raised while computing it.
std::string MultisetOutcome(const Rule& rule, const State& s) {
  try {
    ReserveAllocator reserve(s.signature());
    Json j = Json::array();
    for (const auto& e : Canonical(ComputeUpdateMultiset(rule, s, {}, &reserve))) {
      j.push_back(ToJson(e));
    }
    return Canonical(j);
  } catch (const Error& e) {
    return std::string("error: ") + e.what();
  }
}

std::string StepOutcome(const std::optional<State>& s) {
  return s ? Canonical(ToJson(*s)) : "error";
}

}  // namespace

ProbeReport ProbeBoundedExploration(std::uint64_t seed, std::uint64_t trials,
                                    const std::vector<State>& fixtures) {
  ProbeReport r;
  Rng rng(seed);
  const std::vector<TermPtr> w{term::App(kSelf)};
  for (std::uint64_t attempt = 0; r.checked < trials && attempt < 50 * trials;
       ++attempt) {
    ++r.trials;
    State s1 = DrawState(rng, fixtures);
    State s2 = WithDecodedSignature(gen::Chance(rng, 0.5)
                                        ? PerturbExisting(rng, s1)
                                        : gen::Perturb(rng, s1, gen::ProbeWorld()));
    Decoder decoder;
    RulePtr rule = decoder.Decode(s1).rule;
    bool closed = CheckStrongCoincidence(s1, s2, w, true);
    bool literal = closed || CheckStrongCoincidence(s1, s2, w, false);
    if (!literal) continue;
    bool same = MultisetOutcome(*rule, s1) == MultisetOutcome(*rule, s2);
    if (closed) {
      ++r.checked;
      if (!same) {
        ++r.violations;
        Note(r, "multisets differ on coinciding states for rule:\n" +
                    frontend::PrintRule(*rule));
      }
    } else if (!same) {
      ++r.unclosed_violations;
    }
  }
  return r;
}

ProbeReport ProbeIsomorphismClosure(std::uint64_t seed, std::uint64_t trials,
                                    const std::vector<State>& fixtures) {
  ProbeReport r;
  Rng rng(seed);
  for (std::uint64_t attempt = 0; r.checked < trials && attempt < 50 * trials;
       ++attempt) {
    ++r.trials;
    State s = DrawState(rng, fixtures);
    Renaming sigma = gen::RandomRenaming(rng, s.base());
    std::optional<State> lhs, rhs;
    try {
      lhs = Step(ApplyIsomorphism(s, sigma)).first;
    } catch (const Error&) {
    }
    try {
      rhs = ApplyIsomorphism(Step(s).first, sigma);
    } catch (const Error&) {
    }
    if (lhs && rhs) ++r.checked;
    std::string a = StepOutcome(lhs), b = StepOutcome(rhs);
    if (a != b) {
      ++r.violations;
      Note(r, "step(sigma(S)) differs from sigma(step(S))");
    }
  }
  return r;
}

ProbeReport ProbeDeterminism(std::uint64_t seed, std::uint64_t trials,
                             std::uint64_t max_steps) {
  ProbeReport r;
  Rng rng(seed);
  for (std::uint64_t i = 0; i < trials; ++i) {
    ++r.trials;
    Machine m;
    m.initial = RandomWorldState(rng);
    m.max_steps = max_steps;
    m.seed = seed + i;
    Trace t1 = Run(m);
    Trace t2 = Run(m);
    if (t1.status != RunStatus::kError) ++r.checked;
    std::string why;
    if (Canonical(TraceToJson(t1)) != Canonical(TraceToJson(t2))) {
      ++r.violations;
      Note(r, "re-run produced a different trace");
    } else if (!CheckTrace(t1, &why)) {
      ++r.violations;
      Note(r, why);
    }
  }
  return r;
}

bool CheckTrace(const Trace& trace, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const StepRecord& step = trace.steps[i];
    const State& next =
        i + 1 < trace.steps.size() ? trace.steps[i + 1].state : trace.final_state;
    if (!next.signature().Includes(step.state.signature())) {
      return fail("signature shrank after step " + std::to_string(i));
    }
    State expected = step.collapsed.ok()
                         ? ApplyUpdateSet(step.state, step.collapsed.updates)
                         : step.state;
    if (Canonical(ToJson(expected)["interp"]) != Canonical(ToJson(next)["interp"])) {
      return fail("successor of step " + std::to_string(i) +
                  " is not previous + collapsed set");
    }
  }
  return true;
}

}  // namespace rsasm
