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

#include "rsasm/printer.h"

#include <sstream>

#include "rsasm/structures.h"
#include "rsasm/tree.h"

namespace rsasm::frontend {
namespace {

std::string PathText(const Path& p) {
  std::string s = "NODE[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) s += ".";
    s += std::to_string(p[i]);
  }
  return s + "]";
}

std::string ConstText(const Value& v) {
  switch (v.kind()) {
    case Value::Kind::kSymbol:
      return "DROP(" + v.as_symbol() + ")";
    case Value::Kind::kNode:
      return PathText(v.as_node());
    case Value::Kind::kTerm:
      return "DROP(" + PrintTerm(*v.as_term()) + ")";
    case Value::Kind::kTuple: {
      std::string s = "tuple(";
      const auto& items = v.as_tuple();
      for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) s += ", ";
        s += ConstText(items[i]);
      }
      return s + ")";
    }
    default:
      return ToString(v);
  }
}

std::string Args(const std::vector<TermPtr>& args, std::size_t from = 0) {
  std::string s;
  for (std::size_t i = from; i < args.size(); ++i) {
    if (i > from) s += ", ";
    s += PrintTerm(*args[i]);
  }
  return s;
}

std::string Joined(const std::vector<TermPtr>& args, const char* op) {
  std::string s = "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i > 0) s += std::string(" ") + op + " ";
    s += PrintTerm(*args[i]);
  }
  return s + ")";
}

std::string TreeChild(const Term& c) {
  if (c.kind == Term::Kind::kHole) return "XI";
  if (c.kind == Term::Kind::kTreeLit) {
    if (c.leaf) return c.name + "(" + PrintTerm(*c.leaf) + ")";
    if (c.args.empty()) return c.name;
    std::string s = c.name + "<";
    for (std::size_t i = 0; i < c.args.size(); ++i) {
      if (i > 0) s += ", ";
      s += TreeChild(*c.args[i]);
    }
    return s + ">";
  }
  return "[" + PrintTerm(c) + "]";
}

std::string Binder(const Term& t, const char* keyword) {
  return std::string("(") + keyword + " " + t.name + " IN " + t.domain +
         " . " + PrintTerm(*t.args[0]) + ")";
}

std::string HeadText(const Term& head) {
  switch (head.kind) {
    case Term::Kind::kSym:
      return head.name;
    case Term::Kind::kVar:
      return head.name;
    case Term::Kind::kSubloc:
      return PathText(head.path);
    case Term::Kind::kRaise:
      return "RAISE(" + PrintTerm(*head.args[0]) + ")";
    default:
      return "RAISE(DROP(" + PrintTerm(head) + "))";
  }
}

std::string Target(const Rule& r) {
  std::string s = HeadText(*r.head);
  if (!r.args.empty()) s += "(" + Args(r.args) + ")";
  return s;
}

void RuleText(const Rule& r, int indent, std::ostringstream& out) {
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  switch (r.kind) {
    case Rule::Kind::kAssign:
      out << pad << Target(r) << " := " << PrintTerm(*r.rhs) << "\n";
      return;
    case Rule::Kind::kPartial:
      out << pad << Target(r) << " <=[" << r.op << "] " << Args(r.operands)
          << "\n";
      return;
    case Rule::Kind::kIf: {
      out << pad << "IF " << PrintTerm(*r.rhs) << " THEN\n";
      RuleText(*r.body[0], indent + 1, out);
      const Rule& e = *r.body[1];
      if (!(e.kind == Rule::Kind::kPar && e.body.empty())) {
        out << pad << "ELSE\n";
        RuleText(e, indent + 1, out);
      }
      out << pad << "ENDIF\n";
      return;
    }
    case Rule::Kind::kPar:
      if (r.body.empty()) {
        out << pad << "PAR ENDPAR\n";
        return;
      }
      out << pad << "PAR\n";
      for (const auto& b : r.body) RuleText(*b, indent + 1, out);
      out << pad << "ENDPAR\n";
      return;
    case Rule::Kind::kLet:
      out << pad << "LET " << r.var << " = " << PrintTerm(*r.rhs) << " IN\n";
      RuleText(*r.body[0], indent + 1, out);
      return;
  }
}

}  // namespace

std::string PrintTerm(const Term& t) {
  switch (t.kind) {
    case Term::Kind::kConst:
      return ConstText(t.value);
    case Term::Kind::kVar:
      return t.name;
    case Term::Kind::kApp: {
      if (t.args.size() == 2) {
        if (t.name == "plus") return Joined(t.args, "+");
        if (t.name == "minus") return Joined(t.args, "-");
        if (t.name == "mod") return Joined(t.args, "MOD");
      }
      if (t.args.empty() && !IsBuiltin(t.name)) return t.name;
      std::string s = t.name + "(";
      for (std::size_t i = 0; i < t.args.size(); ++i) {
        if (i > 0) s += ", ";
        const Term& a = *t.args[i];
        if (IsLabelArgument(t.name, i) && a.kind == Term::Kind::kConst &&
            a.value.kind() == Value::Kind::kLabel) {
          s += a.value.as_label();
        } else {
          s += PrintTerm(a);
        }
      }
      return s + ")";
    }
    case Term::Kind::kApply:
      return HeadText(*t.args[0]) + "(" + Args(t.args, 1) + ")";
    case Term::Kind::kSym:
      return "SYM(" + t.name + ")";
    case Term::Kind::kOpApp:
      return "OP(" + t.name + (t.args.empty() ? "" : ", " + Args(t.args)) +
             ")";
    case Term::Kind::kEq:
      return Joined(t.args, "=");
    case Term::Kind::kAnd:
      return Joined(t.args, "AND");
    case Term::Kind::kOr:
      return Joined(t.args, "OR");
    case Term::Kind::kNot:
      return "NOT " + PrintTerm(*t.args[0]);
    case Term::Kind::kIota:
      return Binder(t, "IOTA");
    case Term::Kind::kExists:
      return Binder(t, "EXISTS");
    case Term::Kind::kSetOf:
      return "{" + t.name + " IN " + t.domain + " | " +
             PrintTerm(*t.args[0]) + "}";
    case Term::Kind::kDomain:
      return t.domain;
    case Term::Kind::kDrop:
      return "DROP(" + PrintTerm(*t.args[0]) + ")";
    case Term::Kind::kRaise:
      return "RAISE(" + PrintTerm(*t.args[0]) + ")";
    case Term::Kind::kSubloc:
      return PathText(t.path);
    case Term::Kind::kTreeLit:
      if (t.leaf) return "LEAF(" + t.name + ", " + PrintTerm(*t.leaf) + ")";
      if (t.args.empty()) return t.name + "<>";
      return TreeChild(t);
    case Term::Kind::kHole:
      return "XI";
  }
  return "?";
}

std::string PrintRule(const Rule& r, int indent) {
  std::ostringstream out;
  RuleText(r, indent, out);
  return out.str();
}

std::string PrintSignature(const Signature& sig) {
  std::string s;
  for (const auto& f : sig.symbols()) {
    if (f.name == kSelf) continue;
    if (!s.empty()) s += ", ";
    s += f.name + "/" + std::to_string(f.arity);
  }
  return s;
}

}  // namespace rsasm::frontend
