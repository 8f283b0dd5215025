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

// Randomized probes: bounded exploration with the witness set {self},
// closure under isomorphisms, and run determinism.

#ifndef RSASM_PROBE_H_
#define RSASM_PROBE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "rsasm/engine.h"
#include "rsasm/state.h"

namespace rsasm {

struct ProbeReport {
  std::uint64_t trials = 0;
  // Trials whose precondition held (strong coincidence, or a successful step).
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  // Bounded exploration only: pairs that coincide on the extracted terms
  // themselves but not on their subterms, and whose multisets differ.
  std::uint64_t unclosed_violations = 0;
  std::vector<std::string> findings;

  bool ok() const { return violations == 0; }
};

// Draws random programs and state pairs until `trials` pairs strongly
// coincide on {self} (or 50 * trials attempts), and compares their update
// multisets. `fixtures` are extra initial states whose programs are mixed in.
ProbeReport ProbeBoundedExploration(std::uint64_t seed, std::uint64_t trials,
                                    const std::vector<State>& fixtures = {});

// step(σ(S)) against σ(step(S)) for random states and atom permutations σ.
ProbeReport ProbeIsomorphismClosure(std::uint64_t seed, std::uint64_t trials,
                                    const std::vector<State>& fixtures = {});

// Runs random machines twice and compares the trace JSON bytes; also checks
// signature monotonicity along each trace.
ProbeReport ProbeDeterminism(std::uint64_t seed, std::uint64_t trials,
                             std::uint64_t max_steps = 6);

// Monotonicity and successor = previous + collapsed set along `trace`.
bool CheckTrace(const Trace& trace, std::string* why = nullptr);

}  // namespace rsasm

#endif  // RSASM_PROBE_H_
