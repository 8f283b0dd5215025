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

#include "rsasm/operators.h"

#include <map>

#include "rsasm/error.h"
#include "rsasm/tree.h"
#include "rsasm/treealg.h"

namespace rsasm {
namespace {

bool AnyUndef(const Value& current, const std::vector<Value>& args) {
  if (current.is_undef()) return true;
  for (const auto& a : args) {
    if (a.is_undef()) return true;
  }
  return false;
}

Value Plus(const Value& current, const std::vector<Value>& args) {
  if (AnyUndef(current, args)) return Value();
  if (current.kind() != Value::Kind::kNat) throw EvalError("+ on a non-number");
  std::uint64_t n = current.as_nat();
  for (const auto& a : args) {
    if (a.kind() != Value::Kind::kNat) throw EvalError("+ on a non-number");
    n += a.as_nat();
  }
  return Value::NatV(n);
}

Value Union(const Value& current, const std::vector<Value>& args) {
  if (AnyUndef(current, args)) return Value();
  if (current.kind() != Value::Kind::kSet) throw EvalError("union on a non-set");
  std::vector<Value> items = current.as_set();
  for (const auto& a : args) {
    if (a.kind() != Value::Kind::kSet) throw EvalError("union on a non-set");
    items.insert(items.end(), a.as_set().begin(), a.as_set().end());
  }
  return Value::OfSet(std::move(items));
}

Hedge Flatten(const std::vector<Value>& args) {
  Hedge h;
  for (const auto& a : args) {
    auto part = AsHedge(a);
    h.insert(h.end(), part.begin(), part.end());
  }
  return h;
}

Value Extend(const Value& current, const std::vector<Value>& args,
             bool left) {
  if (AnyUndef(current, args)) return Value();
  if (current.kind() != Value::Kind::kTree) {
    throw EvalError("extension of a non-tree");
  }
  Hedge h = Flatten(args);
  return Value::OfTree(left ? LeftExtendTree(current.as_tree(), h)
                            : RightExtendTree(current.as_tree(), h));
}

Value Assign(const Value&, const std::vector<Value>& args) {
  if (args.size() != 1) throw RuleError("assign takes one operand");
  return args.front();
}

const std::map<std::string, SharedOperator>& Table() {
  static const auto* table = new std::map<std::string, SharedOperator>{
      {"+", {"+", true, Plus}},
      {"union", {"union", true, Union}},
      {"right_extend",
       {"right_extend", false,
        [](const Value& c, const std::vector<Value>& a) {
          return Extend(c, a, false);
        }}},
      {"left_extend",
       {"left_extend", false,
        [](const Value& c, const std::vector<Value>& a) {
          return Extend(c, a, true);
        }}},
      {kAssignOp, {kAssignOp, false, Assign}},
  };
  return *table;
}

}  // namespace

const SharedOperator* FindOperator(const std::string& name) {
  auto it = Table().find(name);
  return it == Table().end() ? nullptr : &it->second;
}

Value ApplyOperator(const std::string& name, const Value& current,
                    const std::vector<Value>& args) {
  const SharedOperator* op = FindOperator(name);
  if (!op) throw RuleError("unknown shared-update operator " + name);
  return op->apply(current, args);
}

std::vector<std::string> OperatorNames() {
  std::vector<std::string> out;
  for (const auto& [name, op] : Table()) {
    if (name != kAssignOp) out.push_back(name);
  }
  return out;
}

}  // namespace rsasm
