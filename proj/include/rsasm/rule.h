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

#ifndef RSASM_RULE_H_
#define RSASM_RULE_H_

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "rsasm/term.h"

namespace rsasm {

struct Rule;
using RulePtr = std::shared_ptr<const Rule>;

// Sequential ASM rule with partial assignment.
//
// Assignment and partial-assignment targets are a head term plus argument
// terms. A static target has head kSym(f); any other head is evaluated and
// must yield a symbol name or a self-tree node (a sublocation).
//
//   kAssign   head(args) := rhs
//   kIf       IF cond THEN body[0] ELSE body[1] ENDIF
//   kPar      PAR body... ENDPAR
//   kLet      LET var = rhs IN body[0]
//   kPartial  head(args) <=[op] operands
struct Rule {
  enum class Kind { kAssign, kIf, kPar, kLet, kPartial };

  Kind kind = Kind::kPar;
  TermPtr head;
  std::vector<TermPtr> args;
  TermPtr rhs;
  std::string op;
  std::vector<TermPtr> operands;
  std::string var;
  std::vector<RulePtr> body;
};

namespace rule {

RulePtr Assign(TermPtr head, std::vector<TermPtr> args, TermPtr rhs);
// Static target `fn(args) := rhs`.
RulePtr Assign(std::string fn, std::vector<TermPtr> args, TermPtr rhs);
RulePtr If(TermPtr cond, RulePtr then_rule, RulePtr else_rule);
RulePtr Par(std::vector<RulePtr> branches = {});
RulePtr Let(std::string var, TermPtr bound, RulePtr body);
RulePtr Partial(TermPtr head, std::vector<TermPtr> args, std::string op,
                std::vector<TermPtr> operands);
RulePtr Partial(std::string fn, std::vector<TermPtr> args, std::string op,
                std::vector<TermPtr> operands);

}  // namespace rule

std::strong_ordering Compare(const Rule& a, const Rule& b);
inline bool Equal(const Rule& a, const Rule& b) {
  return Compare(a, b) == std::strong_ordering::equal;
}

// Replaces free occurrences of `var` in every term of `r`.
RulePtr Substitute(const RulePtr& r, const std::string& var,
                   const TermPtr& replacement);

RulePtr MapConstants(const RulePtr& r,
                     const std::function<Value(const Value&)>& f);

// Every term occurring directly in `r` or its sub-rules, preorder.
void WalkTerms(const Rule& r, const std::function<void(const Term&)>& visit);

}  // namespace rsasm

#endif  // RSASM_RULE_H_
