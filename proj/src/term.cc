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

#include "rsasm/term.h"

#include <utility>

#include "rsasm/tree.h"

namespace rsasm {
namespace term {
namespace {

TermPtr Make(Term t) { return std::make_shared<const Term>(std::move(t)); }

TermPtr Unary(Term::Kind kind, TermPtr a) {
  Term t;
  t.kind = kind;
  t.args = {std::move(a)};
  return Make(std::move(t));
}

TermPtr Binder(Term::Kind kind, std::string var, std::string domain,
               TermPtr cond) {
  Term t;
  t.kind = kind;
  t.name = std::move(var);
  t.domain = std::move(domain);
  t.args = {std::move(cond)};
  return Make(std::move(t));
}

}  // namespace

TermPtr Const(Value v) {
  Term t;
  t.kind = Term::Kind::kConst;
  t.value = std::move(v);
  return Make(std::move(t));
}

TermPtr Var(std::string name) {
  Term t;
  t.kind = Term::Kind::kVar;
  t.name = std::move(name);
  return Make(std::move(t));
}

TermPtr App(std::string fn, std::vector<TermPtr> args) {
  Term t;
  t.kind = Term::Kind::kApp;
  t.name = std::move(fn);
  t.args = std::move(args);
  return Make(std::move(t));
}

TermPtr Apply(TermPtr head, std::vector<TermPtr> args) {
  Term t;
  t.kind = Term::Kind::kApply;
  t.args.push_back(std::move(head));
  for (auto& a : args) t.args.push_back(std::move(a));
  return Make(std::move(t));
}

TermPtr Sym(std::string fn) {
  Term t;
  t.kind = Term::Kind::kSym;
  t.name = std::move(fn);
  return Make(std::move(t));
}

TermPtr OpApp(std::string op, std::vector<TermPtr> args) {
  Term t;
  t.kind = Term::Kind::kOpApp;
  t.name = std::move(op);
  t.args = std::move(args);
  return Make(std::move(t));
}

TermPtr Eq(TermPtr a, TermPtr b) {
  Term t;
  t.kind = Term::Kind::kEq;
  t.args = {std::move(a), std::move(b)};
  return Make(std::move(t));
}

TermPtr And(std::vector<TermPtr> args) {
  Term t;
  t.kind = Term::Kind::kAnd;
  t.args = std::move(args);
  return Make(std::move(t));
}

TermPtr Or(std::vector<TermPtr> args) {
  Term t;
  t.kind = Term::Kind::kOr;
  t.args = std::move(args);
  return Make(std::move(t));
}

TermPtr Not(TermPtr a) { return Unary(Term::Kind::kNot, std::move(a)); }

TermPtr Iota(std::string var, std::string domain, TermPtr cond) {
  return Binder(Term::Kind::kIota, std::move(var), std::move(domain),
                std::move(cond));
}

TermPtr Exists(std::string var, std::string domain, TermPtr cond) {
  return Binder(Term::Kind::kExists, std::move(var), std::move(domain),
                std::move(cond));
}

TermPtr SetOf(std::string var, std::string domain, TermPtr cond) {
  return Binder(Term::Kind::kSetOf, std::move(var), std::move(domain),
                std::move(cond));
}

TermPtr Domain(std::string domain) {
  Term t;
  t.kind = Term::Kind::kDomain;
  t.domain = std::move(domain);
  return Make(std::move(t));
}

TermPtr Drop(TermPtr a) { return Unary(Term::Kind::kDrop, std::move(a)); }

TermPtr Raise(TermPtr a) { return Unary(Term::Kind::kRaise, std::move(a)); }

TermPtr Subloc(Path path) {
  Term t;
  t.kind = Term::Kind::kSubloc;
  t.path = std::move(path);
  return Make(std::move(t));
}

TermPtr TreeLit(std::string label, TermPtr leaf,
                std::vector<TermPtr> children) {
  Term t;
  t.kind = Term::Kind::kTreeLit;
  t.name = std::move(label);
  t.leaf = std::move(leaf);
  t.args = std::move(children);
  return Make(std::move(t));
}

TermPtr Hole() {
  Term t;
  t.kind = Term::Kind::kHole;
  return Make(std::move(t));
}

}  // namespace term

std::strong_ordering Compare(const Term& a, const Term& b) {
  if (&a == &b) return std::strong_ordering::equal;
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  if (auto c = a.name <=> b.name; c != 0) return c;
  if (auto c = a.domain <=> b.domain; c != 0) return c;
  if (auto c = a.value <=> b.value; c != 0) return c;
  if (auto c = a.path <=> b.path; c != 0) return c;
  if (auto c = (a.leaf != nullptr) <=> (b.leaf != nullptr); c != 0) return c;
  if (a.leaf) {
    if (auto c = Compare(*a.leaf, *b.leaf); c != 0) return c;
  }
  if (auto c = a.args.size() <=> b.args.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (auto c = Compare(*a.args[i], *b.args[i]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

namespace {

bool IsBinder(Term::Kind k) {
  return k == Term::Kind::kIota || k == Term::Kind::kExists ||
         k == Term::Kind::kSetOf;
}

void CollectFree(const Term& t, std::set<std::string>& bound,
                 std::set<std::string>& out) {
  if (t.kind == Term::Kind::kVar) {
    if (!bound.contains(t.name)) out.insert(t.name);
    return;
  }
  bool binds = IsBinder(t.kind) && !bound.contains(t.name);
  if (binds) bound.insert(t.name);
  if (t.leaf) CollectFree(*t.leaf, bound, out);
  for (const auto& a : t.args) CollectFree(*a, bound, out);
  if (binds) bound.erase(t.name);
}

// Rebuilds `t` with `f` applied to each direct sub-term; returns `t` itself
// when nothing changed.
TermPtr Rebuild(const TermPtr& t,
                const std::function<TermPtr(const TermPtr&)>& f) {
  bool changed = false;
  Term copy = *t;
  if (copy.leaf) {
    TermPtr n = f(copy.leaf);
    changed |= n != copy.leaf;
    copy.leaf = std::move(n);
  }
  for (auto& a : copy.args) {
    TermPtr n = f(a);
    changed |= n != a;
    a = std::move(n);
  }
  if (!changed) return t;
  return std::make_shared<const Term>(std::move(copy));
}

}  // namespace

std::set<std::string> FreeVars(const Term& t) {
  std::set<std::string> bound, out;
  CollectFree(t, bound, out);
  return out;
}

TermPtr Substitute(const TermPtr& t, const std::string& var,
                   const TermPtr& replacement) {
  if (t->kind == Term::Kind::kVar) {
    return t->name == var ? replacement : t;
  }
  if (IsBinder(t->kind) && t->name == var) return t;
  return Rebuild(t, [&](const TermPtr& a) {
    return Substitute(a, var, replacement);
  });
}

TermPtr MapConstants(const TermPtr& t,
                     const std::function<Value(const Value&)>& f) {
  if (t->kind == Term::Kind::kConst) {
    Value v = f(t->value);
    if (v == t->value) return t;
    return term::Const(std::move(v));
  }
  return Rebuild(t, [&](const TermPtr& a) { return MapConstants(a, f); });
}

Value DropTerm(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::kConst:
      if (t->value.is_scalar()) return t->value;
      break;
    case Term::Kind::kSym:
      return Value::Symbol(t->name);
    case Term::Kind::kSubloc:
      return Value::Node(t->path);
    default:
      break;
  }
  return Value::OfTerm(t);
}

void Walk(const Term& t, const std::function<void(const Term&)>& visit) {
  visit(t);
  if (t.leaf) Walk(*t.leaf, visit);
  for (const auto& a : t.args) Walk(*a, visit);
}

}  // namespace rsasm
