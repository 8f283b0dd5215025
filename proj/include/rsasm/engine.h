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

// The execution loop: each step decodes the signature and rule from self,
// executes the rule, collapses the update multiset and applies the result.

#ifndef RSASM_ENGINE_H_
#define RSASM_ENGINE_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rsasm/rule.h"
#include "rsasm/rules.h"
#include "rsasm/serialize.h"
#include "rsasm/state.h"
#include "rsasm/term.h"

namespace rsasm {

inline constexpr std::uint64_t kDefaultMaxSteps = 1000;

// kDefaultMaxSteps unless RSASM_MAX_STEPS holds a positive integer.
std::uint64_t DefaultMaxSteps();

struct Machine {
  State initial;
  std::uint64_t max_steps = kDefaultMaxSteps;
  std::uint64_t seed = 0;
};

struct StepRecord {
  std::uint64_t index = 0;
  // The state the step starts from.
  State state;
  UpdateMultiset multiset;
  Collapsed collapsed;
  std::string rule_text;
  std::vector<FunctionSymbol> signature_added;
  std::string self_digest;
};

enum class RunStatus { kFixpoint, kMaxSteps, kError };

const char* ToString(RunStatus status);

struct Trace {
  std::vector<StepRecord> steps;
  State final_state;
  RunStatus status = RunStatus::kFixpoint;
  std::string error;
};

// Decodes self and returns the state with its signature replaced by the
// decoded one. Throws ReflectError.
State WithDecodedSignature(const State& state);

// Checks that every function application in `r` names a signature symbol
// with the right arity or a builtin. Throws SignatureError.
void ValidateRule(const Rule& r, const Signature& sig);

// Decodes self, memoized on the identity of the self tree.
class Decoder {
 public:
  struct Decoded {
    RulePtr rule;
    Signature signature;
  };
  const Decoded& Decode(const State& state);

 private:
  std::shared_ptr<const Tree> last_;
  std::optional<Decoded> decoded_;
};

// One transition. On a clash the successor equals `state`. Throws
// ReflectError when self does not decode and SignatureError when the
// successor's signature does not include the current one.
std::pair<State, StepRecord> Step(const State& state, Decoder& decoder);
std::pair<State, StepRecord> Step(const State& state);

// Steps until the collapsed update set is empty, a clash leaves the state
// unchanged, or max_steps is reached. Decode and signature errors end the
// run with status kError.
Trace Run(const Machine& machine);

// {steps: [...], status, final, error?} with keys sorted.
Json TraceToJson(const Trace& trace);
Json StepToJson(const StepRecord& step);

// True iff every term of `w` has the same value in both states and, for
// terms whose value is a self tree or rule encoding, every β-extracted term
// of that encoding also has the same value. With `subterm_closed`, the
// extracted terms are closed under ground subterms first. An evaluation error
// counts as a value of its own, equal only to another error.
bool CheckStrongCoincidence(const State& s1, const State& s2,
                            const std::vector<TermPtr>& w,
                            bool subterm_closed = true);

}  // namespace rsasm

#endif  // RSASM_ENGINE_H_
