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

#include "rsasm/rule.h"

#include <utility>

namespace rsasm {
namespace rule {
namespace {

RulePtr Make(Rule r) { return std::make_shared<const Rule>(std::move(r)); }

}  // namespace

RulePtr Assign(TermPtr head, std::vector<TermPtr> args, TermPtr rhs) {
  Rule r;
  r.kind = Rule::Kind::kAssign;
  r.head = std::move(head);
  r.args = std::move(args);
  r.rhs = std::move(rhs);
  return Make(std::move(r));
}

RulePtr Assign(std::string fn, std::vector<TermPtr> args, TermPtr rhs) {
  return Assign(term::Sym(std::move(fn)), std::move(args), std::move(rhs));
}

RulePtr If(TermPtr cond, RulePtr then_rule, RulePtr else_rule) {
  Rule r;
  r.kind = Rule::Kind::kIf;
  r.rhs = std::move(cond);
  r.body = {std::move(then_rule), std::move(else_rule)};
  return Make(std::move(r));
}

RulePtr Par(std::vector<RulePtr> branches) {
  Rule r;
  r.kind = Rule::Kind::kPar;
  r.body = std::move(branches);
  return Make(std::move(r));
}

RulePtr Let(std::string var, TermPtr bound, RulePtr body) {
  Rule r;
  r.kind = Rule::Kind::kLet;
  r.var = std::move(var);
  r.rhs = std::move(bound);
  r.body = {std::move(body)};
  return Make(std::move(r));
}

RulePtr Partial(TermPtr head, std::vector<TermPtr> args, std::string op,
                std::vector<TermPtr> operands) {
  Rule r;
  r.kind = Rule::Kind::kPartial;
  r.head = std::move(head);
  r.args = std::move(args);
  r.op = std::move(op);
  r.operands = std::move(operands);
  return Make(std::move(r));
}

RulePtr Partial(std::string fn, std::vector<TermPtr> args, std::string op,
                std::vector<TermPtr> operands) {
  return Partial(term::Sym(std::move(fn)), std::move(args), std::move(op),
                 std::move(operands));
}

}  // namespace rule

namespace {

std::strong_ordering CompareTerms(const std::vector<TermPtr>& a,
                                  const std::vector<TermPtr>& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (auto c = Compare(*a[i], *b[i]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering CompareOpt(const TermPtr& a, const TermPtr& b) {
  if (auto c = (a != nullptr) <=> (b != nullptr); c != 0) return c;
  return a ? Compare(*a, *b) : std::strong_ordering::equal;
}

std::vector<TermPtr> MapTerms(const std::vector<TermPtr>& ts,
                              const std::function<TermPtr(const TermPtr&)>& f) {
  std::vector<TermPtr> out;
  out.reserve(ts.size());
  for (const auto& t : ts) out.push_back(f(t));
  return out;
}

RulePtr MapRule(const RulePtr& r,
                const std::function<TermPtr(const TermPtr&)>& f,
                const std::string* stop_var) {
  Rule copy = *r;
  if (copy.head) copy.head = f(copy.head);
  if (copy.rhs) copy.rhs = f(copy.rhs);
  copy.args = MapTerms(copy.args, f);
  copy.operands = MapTerms(copy.operands, f);
  // A let binding the substituted variable ends its scope.
  bool stop = stop_var && copy.kind == Rule::Kind::kLet && copy.var == *stop_var;
  if (!stop) {
    for (auto& b : copy.body) b = MapRule(b, f, stop_var);
  }
  return std::make_shared<const Rule>(std::move(copy));
}

}  // namespace

std::strong_ordering Compare(const Rule& a, const Rule& b) {
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  if (auto c = CompareOpt(a.head, b.head); c != 0) return c;
  if (auto c = CompareTerms(a.args, b.args); c != 0) return c;
  if (auto c = CompareOpt(a.rhs, b.rhs); c != 0) return c;
  if (auto c = a.op <=> b.op; c != 0) return c;
  if (auto c = CompareTerms(a.operands, b.operands); c != 0) return c;
  if (auto c = a.var <=> b.var; c != 0) return c;
  if (auto c = a.body.size() <=> b.body.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.body.size(); ++i) {
    if (auto c = Compare(*a.body[i], *b.body[i]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

RulePtr Substitute(const RulePtr& r, const std::string& var,
                   const TermPtr& replacement) {
  return MapRule(
      r, [&](const TermPtr& t) { return Substitute(t, var, replacement); },
      &var);
}

RulePtr MapConstants(const RulePtr& r,
                     const std::function<Value(const Value&)>& f) {
  return MapRule(
      r, [&](const TermPtr& t) { return MapConstants(t, f); }, nullptr);
}

void WalkTerms(const Rule& r, const std::function<void(const Term&)>& visit) {
  if (r.head) Walk(*r.head, visit);
  for (const auto& a : r.args) Walk(*a, visit);
  if (r.rhs) Walk(*r.rhs, visit);
  for (const auto& a : r.operands) Walk(*a, visit);
  for (const auto& b : r.body) WalkTerms(*b, visit);
}

}  // namespace rsasm
