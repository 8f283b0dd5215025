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

// Parser for the textual program format.
//
//   DOMAINS    D = {a, b, c}  Attr = {at1, at2}
//   SIGNATURE  card/0, set/1
//   INIT       rules run once on the initial state before the first step
//   RULE       the rule stored in self
//   OPTIONS    max_steps = 100, seed = 7
//
// Only RULE is required. `#` starts a comment.

#ifndef RSASM_PARSER_H_
#define RSASM_PARSER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "rsasm/engine.h"
#include "rsasm/rule.h"
#include "rsasm/state.h"
#include "rsasm/term.h"

namespace rsasm::frontend {

struct Program {
  // Declared symbols, including self.
  Signature signature;
  Background background;
  RulePtr init;
  RulePtr rule;
  std::optional<std::uint64_t> max_steps;
  std::uint64_t seed = 0;
};

// Throws ParseError with the line and column of the offending token.
Program Parse(std::string_view text);

// Parses one rule or term against a signature and declared domains.
RulePtr ParseRule(std::string_view text, const Signature& sig,
                  const Background& background);
TermPtr ParseTerm(std::string_view text, const Signature& sig,
                  const Background& background);

// The initial state: self encodes signature and rule, then INIT is applied.
// The base set holds every atom of the domains and of the program. Throws
// RuleError when INIT clashes.
Machine BuildMachine(const Program& program);

// Text that parses back to an equal program.
std::string PrintProgram(const Program& program);

bool Equal(const Program& a, const Program& b);

}  // namespace rsasm::frontend

#endif  // RSASM_PARSER_H_
