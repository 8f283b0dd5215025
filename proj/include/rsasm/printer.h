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

// Pretty-printer for the program syntax. Terms and rules produced by the
// parser print back to text that parses to the same structure.

#ifndef RSASM_PRINTER_H_
#define RSASM_PRINTER_H_

#include <string>

#include "rsasm/rule.h"
#include "rsasm/state.h"
#include "rsasm/term.h"

namespace rsasm::frontend {

std::string PrintTerm(const Term& t);
// Rules are printed one construct per line, indented by two spaces per level.
std::string PrintRule(const Rule& r, int indent = 0);
// `name/arity` entries, comma separated, without `self`.
std::string PrintSignature(const Signature& sig);

}  // namespace rsasm::frontend

#endif  // RSASM_PRINTER_H_
