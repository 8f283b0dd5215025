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

// Small helpers for the unit tests.

#ifndef RSASM_TESTS_TEST_UTIL_H_
#define RSASM_TESTS_TEST_UTIL_H_

#include <string>

#include "rsasm/engine.h"
#include "rsasm/parser.h"
#include "rsasm/rules.h"
#include "rsasm/structures.h"

namespace rsasm::testing {

// A program with the given declarations and an empty rule, after INIT.
inline frontend::Program Declare(const std::string& decls,
                                 const std::string& init = "") {
  std::string text = decls;
  if (!init.empty()) text += "\nINIT\n" + init;
  return frontend::Parse(text + "\nRULE\n  PAR ENDPAR\n");
}

inline State InitialState(const frontend::Program& p) {
  return frontend::BuildMachine(p).initial;
}

inline Value Eval(const frontend::Program& p, const State& s,
                  const std::string& term) {
  return EvalTerm(s, *frontend::ParseTerm(term, s.signature(), p.background));
}

inline Execution Exec(const frontend::Program& p, const State& s,
                      const std::string& rule) {
  return Execute(*frontend::ParseRule(rule, s.signature(), p.background), s);
}

inline Location Loc(const std::string& f, std::vector<Value> args = {}) {
  return Location{f, std::move(args), {}};
}

}  // namespace rsasm::testing

#endif  // RSASM_TESTS_TEST_UTIL_H_
