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

// Operations on states: term evaluation, update application, differences and
// isomorphisms.

#ifndef RSASM_STRUCTURES_H_
#define RSASM_STRUCTURES_H_

#include <map>
#include <cstdint>
#include <string>
#include <vector>

#include "rsasm/rule.h"
#include "rsasm/state.h"
#include "rsasm/term.h"
#include "rsasm/value.h"

namespace rsasm {

class ReserveAllocator;
class Tree;

using Env = std::map<std::string, Value>;

// val_S(term) under `env`. Background functions and signature symbols are
// strict in undef; equality is not. `reserve` supplies fresh names for
// newfunc(); when null, a fresh allocator for the state's signature is used.
//
// Throws SignatureError for unknown symbols or arity mismatches and
// EvalError for unbound variables and ill-typed builtin arguments.
Value EvalTerm(const State& state, const Term& term, const Env& env = {},
               ReserveAllocator* reserve = nullptr);

// Evaluates an assignment target head: the result is a symbol name or a
// self-tree node. RAISE(x) is looked through.
Value EvalHead(const State& state, const Term& head, const Env& env,
               ReserveAllocator* reserve);

// Builtin background functions accepted in kApp terms.
bool IsBuiltin(const std::string& name);
// Argument positions of a builtin that hold a tree label token.
bool IsLabelArgument(const std::string& builtin, std::size_t position);
std::vector<std::string> BuiltinNames();

// The `occurrence`-th node, in preorder, at depth `k` below the rule node of
// a self tree whose position among its siblings is `l`; all counts start at
// zero. Undef when there is no such node.
Value NodeAt(const Tree& self, std::uint64_t k, std::uint64_t l,
             std::uint64_t occurrence);

// True iff no location is updated to two different values.
bool IsConsistent(const UpdateSet& delta);

// S + delta; the identity when delta is inconsistent. Sublocation updates are
// not accepted here (they are normalized by the rules module); throws
// StateError if one is present.
State ApplyUpdateSet(const State& state, const UpdateSet& delta);

// The minimal update set turning s1 into s2. Throws StateError if the
// standard base sets differ or s2's signature does not include s1's.
UpdateSet DiffStates(const State& s1, const State& s2);

// Renaming of standard atoms.
using Renaming = std::map<Value, Value>;

// Applies `sigma` structurally: atoms are renamed wherever they occur
// (location arguments and values, tuples, sets, tree leaves, dropped terms,
// domain contents). Throws IsoError unless `sigma` is a bijection on the
// state's base set.
State ApplyIsomorphism(const State& state, const Renaming& sigma);
Value ApplyRenaming(const Value& v, const Renaming& sigma);
UpdateSet ApplyRenaming(const UpdateSet& delta, const Renaming& sigma);

}  // namespace rsasm

#endif  // RSASM_STRUCTURES_H_
