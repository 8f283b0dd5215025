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

// Operators admitted in partial assignments.

#ifndef RSASM_OPERATORS_H_
#define RSASM_OPERATORS_H_

#include <functional>
#include <string>
#include <vector>

#include "rsasm/value.h"

namespace rsasm {

struct SharedOperator {
  std::string name;
  // Folding order never matters for this operator.
  bool commutative = false;
  std::function<Value(const Value& current, const std::vector<Value>& args)>
      apply;
};

// Internal operator of a plain update normalized to a shared one.
inline constexpr char kAssignOp[] = "assign";

// Null for unknown names.
const SharedOperator* FindOperator(const std::string& name);
// Throws RuleError for an unknown operator; operand type errors surface as
// EvalError or TreeError.
Value ApplyOperator(const std::string& name, const Value& current,
                    const std::vector<Value>& args);
// Names usable in `<=[op]`.
std::vector<std::string> OperatorNames();

}  // namespace rsasm

#endif  // RSASM_OPERATORS_H_
