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

#ifndef RSASM_TERM_H_
#define RSASM_TERM_H_

#include <compare>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "rsasm/value.h"

namespace rsasm {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

// Search domain of a binder: a declared finite domain, or the node set of the
// current self tree.
inline constexpr char kSelfDomain[] = "SELF";

// Immutable term node. Which fields are meaningful depends on `kind`:
//
//   kConst     value
//   kVar       name
//   kApp       name = signature symbol or builtin, args
//   kApply     args[0] = head (evaluates to a symbol name or node), args[1..]
//   kSym       name; the function name itself, evaluates to a symbol value
//   kOpApp     name = shared-update operator, args = (location term, operands)
//   kEq        args[0], args[1]
//   kAnd/kOr   args
//   kNot       args[0]
//   kIota/kExists/kSetOf
//              name = bound variable, domain, args[0] = condition
//   kDomain    domain; the set of its elements
//   kDrop      args[0]; the term as a value
//   kRaise     args[0]; evaluates the value as a term
//   kSubloc    path; the nullary sublocation symbol of a self-tree node
//   kTreeLit   name = label, leaf = optional leaf value term, args = children
//   kHole      the trivial context
struct Term {
  enum class Kind {
    kConst,
    kVar,
    kApp,
    kApply,
    kSym,
    kOpApp,
    kEq,
    kAnd,
    kOr,
    kNot,
    kIota,
    kExists,
    kSetOf,
    kDomain,
    kDrop,
    kRaise,
    kSubloc,
    kTreeLit,
    kHole,
  };

  Kind kind = Kind::kConst;
  std::string name;
  std::string domain;
  Value value;
  Path path;
  TermPtr leaf;
  std::vector<TermPtr> args;
};

namespace term {

TermPtr Const(Value v);
TermPtr Var(std::string name);
TermPtr App(std::string fn, std::vector<TermPtr> args = {});
TermPtr Apply(TermPtr head, std::vector<TermPtr> args);
TermPtr Sym(std::string fn);
TermPtr OpApp(std::string op, std::vector<TermPtr> args);
TermPtr Eq(TermPtr a, TermPtr b);
TermPtr And(std::vector<TermPtr> args);
TermPtr Or(std::vector<TermPtr> args);
TermPtr Not(TermPtr a);
TermPtr Iota(std::string var, std::string domain, TermPtr cond);
TermPtr Exists(std::string var, std::string domain, TermPtr cond);
TermPtr SetOf(std::string var, std::string domain, TermPtr cond);
TermPtr Domain(std::string domain);
TermPtr Drop(TermPtr a);
TermPtr Raise(TermPtr a);
TermPtr Subloc(Path path);
TermPtr TreeLit(std::string label, TermPtr leaf, std::vector<TermPtr> children);
TermPtr Hole();

}  // namespace term

std::strong_ordering Compare(const Term& a, const Term& b);
inline bool Equal(const Term& a, const Term& b) {
  return Compare(a, b) == std::strong_ordering::equal;
}

// Free variables of `t`.
std::set<std::string> FreeVars(const Term& t);

// Replaces free occurrences of `var` by `replacement`. Binders in this
// language never shadow, so no renaming is needed.
TermPtr Substitute(const TermPtr& t, const std::string& var,
                   const TermPtr& replacement);

// Rebuilds `t` with `f` applied to every constant value (and recursively to
// values nested inside them).
TermPtr MapConstants(const TermPtr& t,
                     const std::function<Value(const Value&)>& f);

// drop(t): scalar constants and symbol names stay as they are, sublocation
// symbols become node values, anything else becomes a dropped term.
Value DropTerm(const TermPtr& t);

// Calls `visit` on `t` and every sub-term, preorder. Dropped terms stored in
// constants are not entered.
void Walk(const Term& t, const std::function<void(const Term&)>& visit);

}  // namespace rsasm

#endif  // RSASM_TERM_H_
