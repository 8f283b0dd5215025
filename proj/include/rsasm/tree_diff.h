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

// Tree difference: an algebra term rebuilding one self tree from another, and
// the update rule derived from it.

#ifndef RSASM_TREE_DIFF_H_
#define RSASM_TREE_DIFF_H_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "rsasm/rule.h"
#include "rsasm/term.h"
#include "rsasm/tree.h"
#include "rsasm/value.h"

namespace rsasm {

struct AlgebraTerm;
using AlgebraPtr = std::shared_ptr<const AlgebraTerm>;

// Expression over the tree algebra, evaluated against a source tree t.
//
//   kSubtreeAt      subtree of t at `path`
//   kContextAt      context of t between `path` and `path2`
//   kReuse          subtree of t at node_at(k, l, occurrence)
//   kLiteral        `literal`
//   kHedge          the concatenation of the args' trees and hedges
//   kLabelHedge     label_hedge(label, args...)
//   kLabelContext   label_context(label, args[0])
//   kLeftExtend     left_extend(args[0], args[1])
//   kRightExtend    right_extend(args[0], args[1])
//   kConcat         concat(args[0], args[1])
//   kInjectHedge    inject_hedge(args[0], args[1])
//   kInjectContext  inject_context(args[0], args[1])
struct AlgebraTerm {
  enum class Kind {
    kSubtreeAt,
    kContextAt,
    kReuse,
    kLiteral,
    kHedge,
    kLabelHedge,
    kLabelContext,
    kLeftExtend,
    kRightExtend,
    kConcat,
    kInjectHedge,
    kInjectContext,
  };

  Kind kind = Kind::kLiteral;
  Path path;
  Path path2;
  std::uint64_t k = 0;
  std::uint64_t l = 0;
  std::uint64_t occurrence = 0;
  std::shared_ptr<const Tree> literal;
  std::string label;
  std::vector<AlgebraPtr> args;
};

namespace algebra {
AlgebraPtr SubtreeAt(Path path);
AlgebraPtr ContextAt(Path path, Path path2);
AlgebraPtr Reuse(std::uint64_t k, std::uint64_t l, std::uint64_t occurrence);
AlgebraPtr Literal(Tree t);
AlgebraPtr Hedge(std::vector<AlgebraPtr> args);
AlgebraPtr LabelHedge(std::string label, std::vector<AlgebraPtr> args);
AlgebraPtr Op(AlgebraTerm::Kind kind, std::vector<AlgebraPtr> args,
              std::string label = "");
}  // namespace algebra

// θ(t): a tree, context or hedge value. Throws TreeError.
Value EvalAlgebra(const AlgebraTerm& theta, const Tree& t);
// θ(t) when it is a tree.
Tree EvalAlgebraTree(const AlgebraTerm& theta, const Tree& t);

// The same expression in the term language, read against the self tree.
TermPtr AlgebraToTerm(const AlgebraTerm& theta);

std::string ToString(const AlgebraTerm& theta);
// True iff some node of θ has the given kind.
bool Mentions(const AlgebraTerm& theta, AlgebraTerm::Kind kind);

// θ with θ(t) = t2. The signature part reuses t's signature, extended on the
// right when t's entries are a prefix of t2's; the rule part reuses subtrees
// of t where possible and rebuilds the remaining nodes.
// Throws TreeError unless both trees are self shaped.
AlgebraPtr TreeDiff(const Tree& t, const Tree& t2);

// A PAR of sublocation assignments to the signature and rule nodes which,
// run on a state with self = t, collapses to {(self, t2)}.
RulePtr TreeUpdateRule(const Tree& t, const Tree& t2);

}  // namespace rsasm

#endif  // RSASM_TREE_DIFF_H_
