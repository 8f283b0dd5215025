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

// The self representation: signatures and rules as trees, raise and drop,
// the extraction function and reserve symbols.
//
// Shapes (leaf values in parentheses):
//
//   self<signature<func<name(f), arity(n)>...>, rule<R>>
//   update<func(f), term((t1..tn)), term((t0))>
//   if<bool(phi), rule<R1>, rule<R2>>
//   par<rule<R1>, ..., rule<Rk>>
//   let<term((x)), term((t)), rule<R>>
//   partial<func(f), func(op), term((t1..tn)), term((t1'..tm'))>
//
// A term leaf holds the tuple of the dropped terms. A func leaf holds a
// symbol name, or the dropped head term of a dynamic target.

#ifndef RSASM_REFLECT_H_
#define RSASM_REFLECT_H_

#include <string>
#include <utility>
#include <vector>

#include "rsasm/reserve.h"
#include "rsasm/rule.h"
#include "rsasm/rules.h"
#include "rsasm/state.h"
#include "rsasm/term.h"
#include "rsasm/tree.h"

namespace rsasm {

namespace label {
inline constexpr char kSelf[] = "self";
inline constexpr char kSignature[] = "signature";
inline constexpr char kRule[] = "rule";
inline constexpr char kFunc[] = "func";
inline constexpr char kName[] = "name";
inline constexpr char kArity[] = "arity";
inline constexpr char kUpdate[] = "update";
inline constexpr char kTerm[] = "term";
inline constexpr char kIf[] = "if";
inline constexpr char kBool[] = "bool";
inline constexpr char kPar[] = "par";
inline constexpr char kLet[] = "let";
inline constexpr char kPartial[] = "partial";
}  // namespace label

// Paths of the two children of the self root.
inline const Path kSignaturePath = {0};
inline const Path kRulePath = {1};

Tree EncodeRule(const Rule& r);
// Accepts a rule encoding or a `rule<...>` wrapper around one. Throws
// ReflectError, naming the offending node path, on malformed input.
RulePtr DecodeRule(const Tree& t);

Tree EncodeSignature(const Signature& sig);
// Throws ReflectError on malformed entries or duplicate names.
Signature DecodeSignature(const Tree& t);

Tree EncodeSelf(const Signature& sig, const Rule& r);
// Checks the root shape; throws ReflectError.
void CheckSelfShape(const Tree& self);

// drop and raise. Scalars are fixed by both.
Value Drop(const TermPtr& t);
Value DropRule(const Rule& r);
// Throws ReflectError for values that are not dropped terms, symbol names,
// nodes or scalars.
TermPtr Raise(const Value& v);
RulePtr RaiseRule(const Value& v);
// True for values in the image of Drop.
bool IsLiftable(const Value& v);

// β on a rule encoding (or a rule<...> wrapper).
std::vector<TermPtr> Beta(const Tree& t);

// The `rule` (resp. `signature`) child subtree of a self tree, located with
// an iota over the self nodes. Throws ReflectError when it does not exist.
Tree RuleOfSelf(const Tree& self);
Tree SignatureOfSelf(const Tree& self);
// The same by a direct scan of the root's children.
Tree RuleOfSelfByScan(const Tree& self);
Tree SignatureOfSelfByScan(const Tree& self);

// func<name(f), arity(n)>.
Tree FuncEntry(const std::string& name, std::uint32_t arity);

// Allocates a reserve symbol and returns it with the shared update that
// appends its entry to the signature node of self.
std::pair<std::string, SharedUpdate> NewFunction(const State& state,
                                                 std::uint32_t arity,
                                                 ReserveAllocator& reserve);

}  // namespace rsasm

#endif  // RSASM_REFLECT_H_
