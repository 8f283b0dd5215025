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

// Random trees, rules and states for property tests and probes.

#ifndef RSASM_RANDOM_PROGRAM_H_
#define RSASM_RANDOM_PROGRAM_H_

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "rsasm/rule.h"
#include "rsasm/state.h"
#include "rsasm/structures.h"
#include "rsasm/tree.h"

namespace rsasm::gen {

using Rng = std::mt19937_64;

// Uniform integer in [lo, hi].
std::uint64_t Uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi);
bool Chance(Rng& rng, double p);

// Trees over labels a..d with at most `max_nodes` nodes; leaves may carry
// small naturals or atoms when `with_values`.
Tree RandomTree(Rng& rng, std::size_t max_nodes, bool with_values = true);
// A random tree with one leaf replaced by the hole.
Context RandomContext(Rng& rng, std::size_t max_nodes);
Hedge RandomHedge(Rng& rng, std::size_t max_trees, std::size_t max_nodes);

// The fixed vocabulary of generated programs:
//
//   D = {a, b, c}, N = {0, 1, 2, 3}
//   c0/0, c1/0 hold atoms; n/0 holds a natural; mode/0 an atom
//   f/1 maps atoms to atoms, g/1 atoms to naturals, h/2 atom pairs to atoms
//   junk/1 is never read by generated rules
struct World {
  Signature signature;
  Background background;
  std::set<Value> base;
};

const World& ProbeWorld();

// A random rule whose top level is a PAR. Assignment targets are static or
// computed from self alone.
RulePtr RandomRule(Rng& rng, const World& world, int depth = 3);

// A state over `world` whose self encodes `rule` and whose other locations
// hold random well-typed values.
State RandomState(Rng& rng, const World& world, const Rule& rule);

// Copy of `state` with a few non-self locations changed (possibly none).
State Perturb(Rng& rng, const State& state, const World& world);

// A random permutation of the world's base atoms.
Renaming RandomRenaming(Rng& rng, const std::set<Value>& base);

// A self tree encoding a random rule over the world signature.
Tree RandomSelfTree(Rng& rng, const World& world, int depth = 3);

}  // namespace rsasm::gen

#endif  // RSASM_RANDOM_PROGRAM_H_
