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


// Case generators and independent oracles shared by the unit tests and the
// acceptance binary.

#ifndef RSASM_TESTS_FIXTURES_H_
#define RSASM_TESTS_FIXTURES_H_

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "rsasm/engine.h"
#include "rsasm/random_program.h"
#include "rsasm/rule.h"
#include "rsasm/term.h"

namespace rsasm::testing {

std::string ProgramPath(const std::string& name);
std::string ReadProgram(const std::string& name);
Trace RunSource(const std::string& source);

// Parity: the bundled program with INIT rewritten so that set(x) holds
// exactly for the members of `mask` (bit i for the i-th element of D).
std::string ParitySource(std::uint32_t mask);
// Runs one subset and checks parity, card, status, step count and time.
bool CheckParityCase(std::uint32_t mask, std::string* why,
                     double max_ms = 50.0);

// Join: R1 over attrs1 and R2 over attrs2, in schema order.
using Row = std::vector<std::string>;
struct JoinCase {
  std::vector<std::string> attrs1;
  std::vector<std::string> attrs2;
  std::set<Row> r1;
  std::set<Row> r2;
};
JoinCase BundledJoinCase();
JoinCase RandomJoinCase(gen::Rng& rng);
std::string JoinSource(const JoinCase& c);
// Expected attribute layout of the result: attrs1, then the attributes of
// attrs2 not in attrs1, each in schema order.
std::vector<std::string> JoinLayout(const JoinCase& c);
// Brute force over all row pairs that agree on the shared attributes.
std::set<Row> JoinOracle(const JoinCase& c);
bool CheckJoinCase(const JoinCase& c, std::string* why);

// Tree algebra laws on one random draw.
bool TreeLawTrial(gen::Rng& rng, std::string* why);

// β computed directly from the rule syntax, equation by equation.
std::vector<TermPtr> BetaOracle(const Rule& r);
// Encode/decode, raise/drop and β checks on one random rule.
bool ReflectionTrial(gen::Rng& rng, std::string* why);

// tree_diff and tree_update_rule on one random pair of self trees.
bool TreeDiffTrial(gen::Rng& rng, std::string* why);

// Runs a program twice and checks trace bytes and the trace invariants.
bool CheckFixtureTrace(const std::string& name, std::string* why);

// States from the bundled fixture runs, used to seed the probes.
std::vector<State> FixtureStates();

}  // namespace rsasm::testing

#endif  // RSASM_TESTS_FIXTURES_H_
