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

#include "rsasm/parser.h"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>
#include <vector>

#include "rsasm/error.h"
#include "rsasm/operators.h"
#include "rsasm/printer.h"
#include "rsasm/reflect.h"
#include "rsasm/rules.h"
#include "rsasm/structures.h"

namespace rsasm::frontend {
namespace {

enum class Tok { kIdent, kKeyword, kInt, kPunct, kEnd };

struct Token {
  Tok type = Tok::kEnd;
  std::string text;
  int line = 1;
  int column = 1;
};

const std::set<std::string>& Keywords() {
  static const auto* kw = new std::set<std::string>{
      "DOMAINS", "SIGNATURE", "INIT",  "RULE",  "OPTIONS",   "IF",
      "THEN",    "ELSE",      "ENDIF", "PAR",   "ENDPAR",    "LET",
      "IN",      "PARFOR",    "ENDPARFOR", "IOTA", "EXISTS", "DROP",
      "RAISE",   "SYM",       "AND",   "OR",    "NOT",       "MOD",
      "XI",      "SELF",      "LEAF",  "NODE",  "LABEL",     "OP"};
  return *kw;
}

bool IsSection(const Token& t) {
  return t.type == Tok::kKeyword &&
         (t.text == "DOMAINS" || t.text == "SIGNATURE" || t.text == "INIT" ||
          t.text == "RULE" || t.text == "OPTIONS");
}

std::vector<Token> Lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.column = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) ||
              src[j] == '_' || src[j] == '$')) {
        ++j;
      }
      t.text = std::string(src.substr(i, j - i));
      t.type = Keywords().count(t.text) ? Tok::kKeyword : Tok::kIdent;
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) {
        ++j;
      }
      t.type = Tok::kInt;
      t.text = std::string(src.substr(i, j - i));
      advance(j - i);
    } else {
      static const char* two[] = {":=", "<=", "!="};
      t.type = Tok::kPunct;
      for (const char* p : two) {
        if (src.substr(i, 2) == p) t.text = p;
      }
      if (t.text.empty()) {
        if (std::string_view("(){}[]<>,.|=+-/").find(c) == std::string_view::npos) {
          throw ParseError(std::string("unexpected character '") + c + "'",
                           line, col);
        }
        t.text = std::string(1, c);
      }
      advance(t.text.size());
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, Signature sig, Background bg)
      : toks_(std::move(tokens)), sig_(std::move(sig)), bg_(std::move(bg)) {}

  Program ParseProgram();
  RulePtr ParseRuleOnly() {
    RulePtr r = Rules();
    ExpectEnd();
    return r;
  }
  TermPtr ParseTermOnly() {
    TermPtr t = Expr();
    ExpectEnd();
    return t;
  }

 private:
  // Token access --------------------------------------------------------------
  const Token& Peek(std::size_t k = 0) const {
    return toks_[std::min(pos_ + k, toks_.size() - 1)];
  }
  const Token& Next() {
    const Token& t = Peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  bool IsPunct(const char* p, std::size_t k = 0) const {
    return Peek(k).type == Tok::kPunct && Peek(k).text == p;
  }
  bool IsKeyword(const char* kw, std::size_t k = 0) const {
    return Peek(k).type == Tok::kKeyword && Peek(k).text == kw;
  }
  bool AcceptPunct(const char* p) {
    if (!IsPunct(p)) return false;
    Next();
    return true;
  }
  bool AcceptKeyword(const char* kw) {
    if (!IsKeyword(kw)) return false;
    Next();
    return true;
  }
  [[noreturn]] void Fail(const std::string& msg, const Token& at) const {
    throw ParseError(msg, at.line, at.column);
  }
  [[noreturn]] void Fail(const std::string& msg) const { Fail(msg, Peek()); }
  std::string Describe(const Token& t) const {
    return t.type == Tok::kEnd ? "end of input" : "'" + t.text + "'";
  }
  void ExpectPunct(const char* p) {
    if (!AcceptPunct(p)) {
      Fail(std::string("expected '") + p + "', got " + Describe(Peek()));
    }
  }
  void ExpectKeyword(const char* kw) {
    if (!AcceptKeyword(kw)) {
      Fail(std::string("expected ") + kw + ", got " + Describe(Peek()));
    }
  }
  std::string ExpectIdent(const char* what) {
    if (Peek().type != Tok::kIdent) {
      Fail(std::string("expected ") + what + ", got " + Describe(Peek()));
    }
    return Next().text;
  }
  std::uint64_t ExpectInt() {
    if (Peek().type != Tok::kInt) Fail("expected a number, got " + Describe(Peek()));
    const Token& t = Next();
    try {
      return std::stoull(t.text);
    } catch (const std::exception&) {
      Fail("number out of range", t);
    }
  }
  void ExpectEnd() {
    if (Peek().type != Tok::kEnd) Fail("unexpected " + Describe(Peek()));
  }

  // Scopes --------------------------------------------------------------------
  bool Bound(const std::string& x) const { return bound_.count(x) > 0; }
  void Bind(const std::string& x, const Token& at) {
    if (Bound(x)) Fail("variable '" + x + "' shadows an enclosing binding", at);
    bound_.insert(x);
  }
  void Unbind(const std::string& x) { bound_.erase(x); }
  std::string Domain(const Token& at, bool allow_self) {
    if (allow_self && AcceptKeyword("SELF")) return kSelfDomain;
    std::string d = ExpectIdent("a domain name");
    if (!bg_.domains.count(d)) Fail("undeclared domain '" + d + "'", at);
    return d;
  }

  // Sections ------------------------------------------------------------------
  void Domains();
  void SignatureSection();
  void Options(Program& p);
  Value DomainElement();

  // Rules ---------------------------------------------------------------------
  RulePtr Rules();
  bool AtRuleEnd() const;
  RulePtr OneRule();
  RulePtr IfRule();
  RulePtr LetRule();
  RulePtr ParFor();
  RulePtr Update();

  // Terms ---------------------------------------------------------------------
  TermPtr Expr() { return Or(); }
  TermPtr Or();
  TermPtr And();
  TermPtr Not();
  TermPtr Cmp();
  TermPtr Add();
  TermPtr Mul();
  TermPtr Primary();
  TermPtr Binder(Term::Kind kind);
  TermPtr Comprehension();
  TermPtr DropTerm();
  TermPtr TreeLiteral(const std::string& label);
  TermPtr TreeChild();
  TermPtr Identifier();
  std::vector<TermPtr> CallArgs(const std::string& fn);
  std::vector<TermPtr> ArgList();
  Path NodePath();
  std::string OperatorName();

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Signature sig_;
  Background bg_;
  std::set<std::string> bound_;
};

// Sections --------------------------------------------------------------------

Value Parser::DomainElement() {
  const Token& t = Peek();
  if (t.type == Tok::kInt) return Value::NatV(ExpectInt());
  if (t.type == Tok::kIdent) {
    std::string name = Next().text;
    if (name == "true") return Value::True();
    if (name == "false") return Value::False();
    if (name == "undef") Fail("undef cannot be a domain element", t);
    if (sig_.Contains(name) || IsBuiltin(name)) {
      Fail("domain element '" + name + "' is a function name", t);
    }
    return Value::AtomV(name);
  }
  Fail("expected a domain element, got " + Describe(t));
}

void Parser::Domains() {
  while (Peek().type == Tok::kIdent) {
    const Token& at = Peek();
    std::string name = Next().text;
    if (bg_.domains.count(name)) Fail("duplicate domain '" + name + "'", at);
    if (sig_.Contains(name) || IsBuiltin(name)) {
      Fail("domain '" + name + "' clashes with a function name", at);
    }
    ExpectPunct("=");
    ExpectPunct("{");
    std::vector<Value> elems;
    if (!IsPunct("}")) {
      do {
        elems.push_back(DomainElement());
      } while (AcceptPunct(","));
    }
    ExpectPunct("}");
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    bg_.domains[name] = std::move(elems);
  }
}

void Parser::SignatureSection() {
  if (Peek().type != Tok::kIdent) return;
  do {
    const Token& at = Peek();
    std::string name = ExpectIdent("a function name");
    ExpectPunct("/");
    std::uint64_t arity = ExpectInt();
    if (name == kSelf) Fail("self is declared implicitly", at);
    for (const auto& [domain, elems] : bg_.domains) {
      if (name == domain ||
          std::binary_search(elems.begin(), elems.end(),
                             Value::AtomV(name))) {
        Fail("function '" + name + "' clashes with domain '" + domain + "'",
             at);
      }
    }
    try {
      sig_.Add({name, static_cast<std::uint32_t>(arity)});
    } catch (const SignatureError& e) {
      Fail(e.what(), at);
    }
  } while (AcceptPunct(","));
}

void Parser::Options(Program& p) {
  while (Peek().type == Tok::kIdent) {
    const Token& at = Peek();
    std::string key = Next().text;
    ExpectPunct("=");
    std::uint64_t v = ExpectInt();
    if (key == "max_steps") {
      p.max_steps = v;
    } else if (key == "seed") {
      p.seed = v;
    } else {
      Fail("unknown option '" + key + "'", at);
    }
    AcceptPunct(",");
  }
}

Program Parser::ParseProgram() {
  Program p;
  static const char* order[] = {"DOMAINS", "SIGNATURE", "INIT", "RULE",
                                "OPTIONS"};
  int last = -1;
  RulePtr init, rule;
  while (Peek().type != Tok::kEnd) {
    const Token& at = Peek();
    if (!IsSection(at)) Fail("expected a section header, got " + Describe(at));
    int idx = 0;
    while (at.text != order[idx]) ++idx;
    if (idx <= last) Fail("section " + at.text + " out of order", at);
    last = idx;
    Next();
    switch (idx) {
      case 0: Domains(); break;
      case 1: SignatureSection(); break;
      case 2: init = Rules(); break;
      case 3: rule = Rules(); break;
      case 4: Options(p); break;
    }
    if (!IsSection(Peek()) && Peek().type != Tok::kEnd) {
      Fail("unexpected " + Describe(Peek()));
    }
  }
  if (!rule) Fail("missing RULE section");
  p.signature = sig_;
  p.background = bg_;
  p.init = init ? init : rule::Par();
  p.rule = rule;
  return p;
}

// Rules -----------------------------------------------------------------------

bool Parser::AtRuleEnd() const {
  const Token& t = Peek();
  if (t.type == Tok::kEnd || IsSection(t)) return true;
  return t.type == Tok::kKeyword &&
         (t.text == "ELSE" || t.text == "ENDIF" || t.text == "ENDPAR" ||
          t.text == "ENDPARFOR");
}

RulePtr Parser::Rules() {
  std::vector<RulePtr> rs;
  while (!AtRuleEnd()) rs.push_back(OneRule());
  if (rs.empty()) Fail("expected a rule, got " + Describe(Peek()));
  if (rs.size() == 1) return rs.front();
  return rule::Par(std::move(rs));
}

RulePtr Parser::OneRule() {
  if (IsKeyword("IF")) return IfRule();
  if (IsKeyword("LET")) return LetRule();
  if (IsKeyword("PARFOR")) return ParFor();
  if (AcceptKeyword("PAR")) {
    std::vector<RulePtr> rs;
    while (!IsKeyword("ENDPAR")) {
      if (AtRuleEnd()) Fail("expected ENDPAR, got " + Describe(Peek()));
      rs.push_back(OneRule());
    }
    Next();
    return rule::Par(std::move(rs));
  }
  return Update();
}

RulePtr Parser::IfRule() {
  ExpectKeyword("IF");
  TermPtr cond = Expr();
  ExpectKeyword("THEN");
  RulePtr then_rule = Rules();
  RulePtr else_rule = rule::Par();
  if (AcceptKeyword("ELSE")) {
    else_rule = Rules();
  }
  ExpectKeyword("ENDIF");
  return rule::If(std::move(cond), std::move(then_rule), std::move(else_rule));
}

RulePtr Parser::LetRule() {
  ExpectKeyword("LET");
  std::vector<std::pair<std::string, TermPtr>> binds;
  do {
    const Token& t = Peek();
    std::string x = ExpectIdent("a variable");
    ExpectPunct("=");
    TermPtr v = Expr();
    Bind(x, t);
    binds.emplace_back(x, std::move(v));
  } while (AcceptPunct(","));
  ExpectKeyword("IN");
  RulePtr body = OneRule();
  for (auto it = binds.rbegin(); it != binds.rend(); ++it) {
    Unbind(it->first);
    body = rule::Let(it->first, it->second, std::move(body));
  }
  return body;
}

RulePtr Parser::ParFor() {
  const Token& at = Next();
  const Token& vt = Peek();
  std::string x = ExpectIdent("a variable");
  ExpectKeyword("IN");
  std::string dom = Domain(at, false);
  Bind(x, vt);
  std::vector<RulePtr> rs;
  while (!IsKeyword("ENDPARFOR")) {
    if (AtRuleEnd()) Fail("expected ENDPARFOR, got " + Describe(Peek()));
    rs.push_back(OneRule());
  }
  Next();
  Unbind(x);
  RulePtr body = rs.size() == 1 ? rs.front() : rule::Par(rs);
  std::vector<RulePtr> copies;
  for (const Value& v : bg_.domains.at(dom)) {
    copies.push_back(Substitute(body, x, term::Const(v)));
  }
  return rule::Par(std::move(copies));
}

std::string Parser::OperatorName() {
  if (AcceptPunct("+")) return "+";
  if (AcceptPunct("-")) return "-";
  return ExpectIdent("an operator");
}

RulePtr Parser::Update() {
  const Token& at = Peek();
  TermPtr head;
  std::vector<TermPtr> args;
  if (AcceptKeyword("RAISE")) {
    ExpectPunct("(");
    head = term::Raise(Expr());
    ExpectPunct(")");
    if (IsPunct("(")) args = ArgList();
  } else if (AcceptKeyword("NODE")) {
    head = term::Subloc(NodePath());
  } else if (at.type == Tok::kIdent) {
    std::string name = Next().text;
    if (Bound(name)) {
      head = term::Var(name);
      if (IsPunct("(")) args = ArgList();
    } else {
      auto arity = sig_.ArityOf(name);
      if (!arity) Fail("'" + name + "' is not a declared function", at);
      head = term::Sym(name);
      if (IsPunct("(")) args = ArgList();
      if (args.size() != *arity) {
        Fail(name + " expects " + std::to_string(*arity) +
                 " arguments, got " + std::to_string(args.size()),
             at);
      }
    }
  } else {
    Fail("expected a rule, got " + Describe(at));
  }
  if (AcceptPunct(":=")) {
    return rule::Assign(std::move(head), std::move(args), Expr());
  }
  if (AcceptPunct("<=")) {
    ExpectPunct("[");
    const Token& ot = Peek();
    std::string op = OperatorName();
    if (!FindOperator(op) || op == kAssignOp) {
      Fail("unknown shared-update operator '" + op + "'", ot);
    }
    ExpectPunct("]");
    std::vector<TermPtr> operands;
    do {
      operands.push_back(Expr());
    } while (AcceptPunct(","));
    return rule::Partial(std::move(head), std::move(args), op,
                         std::move(operands));
  }
  Fail("expected ':=' or '<=[op]', got " + Describe(Peek()));
}

// Terms -----------------------------------------------------------------------

TermPtr Parser::Or() {
  std::vector<TermPtr> xs{And()};
  while (AcceptKeyword("OR")) xs.push_back(And());
  return xs.size() == 1 ? xs.front() : term::Or(std::move(xs));
}

TermPtr Parser::And() {
  std::vector<TermPtr> xs{Not()};
  while (AcceptKeyword("AND")) xs.push_back(Not());
  return xs.size() == 1 ? xs.front() : term::And(std::move(xs));
}

TermPtr Parser::Not() {
  if (AcceptKeyword("NOT")) return term::Not(Not());
  return Cmp();
}

TermPtr Parser::Cmp() {
  TermPtr a = Add();
  if (AcceptPunct("=")) return term::Eq(a, Add());
  if (AcceptPunct("!=")) return term::Not(term::Eq(a, Add()));
  return a;
}

TermPtr Parser::Add() {
  TermPtr a = Mul();
  for (;;) {
    if (AcceptPunct("+")) {
      a = term::App("plus", {a, Mul()});
    } else if (AcceptPunct("-")) {
      a = term::App("minus", {a, Mul()});
    } else {
      return a;
    }
  }
}

TermPtr Parser::Mul() {
  TermPtr a = Primary();
  while (AcceptKeyword("MOD")) a = term::App("mod", {a, Primary()});
  return a;
}

Path Parser::NodePath() {
  ExpectPunct("[");
  Path p;
  if (!IsPunct("]")) {
    do {
      p.push_back(static_cast<std::uint32_t>(ExpectInt()));
    } while (AcceptPunct("."));
  }
  ExpectPunct("]");
  return p;
}

std::vector<TermPtr> Parser::ArgList() {
  ExpectPunct("(");
  std::vector<TermPtr> args;
  if (!IsPunct(")")) {
    do {
      args.push_back(Expr());
    } while (AcceptPunct(","));
  }
  ExpectPunct(")");
  return args;
}

std::vector<TermPtr> Parser::CallArgs(const std::string& fn) {
  ExpectPunct("(");
  std::vector<TermPtr> args;
  if (!IsPunct(")")) {
    do {
      if (IsLabelArgument(fn, args.size()) && Peek().type == Tok::kIdent &&
          (IsPunct(",", 1) || IsPunct(")", 1))) {
        args.push_back(term::Const(Value::Label(Next().text)));
      } else {
        args.push_back(Expr());
      }
    } while (AcceptPunct(","));
  }
  ExpectPunct(")");
  return args;
}

TermPtr Parser::Binder(Term::Kind kind) {
  const Token& at = Next();
  const Token& vt = Peek();
  std::string x = ExpectIdent("a variable");
  ExpectKeyword("IN");
  std::string dom = Domain(at, true);
  ExpectPunct(".");
  Bind(x, vt);
  TermPtr cond = Expr();
  Unbind(x);
  return kind == Term::Kind::kIota ? term::Iota(x, dom, cond)
                                   : term::Exists(x, dom, cond);
}

TermPtr Parser::Comprehension() {
  const Token& at = Peek();
  std::string x = ExpectIdent("a variable");
  ExpectKeyword("IN");
  std::string dom = Domain(at, true);
  ExpectPunct("|");
  Bind(x, at);
  TermPtr cond = Expr();
  Unbind(x);
  ExpectPunct("}");
  return term::SetOf(x, dom, cond);
}

TermPtr Parser::DropTerm() {
  ExpectPunct("(");
  TermPtr out;
  if ((IsPunct("+") || IsPunct("-")) && IsPunct(")", 1)) {
    out = term::Const(Value::Symbol(Next().text));
  } else if (Peek().type == Tok::kIdent && IsPunct(")", 1) &&
             !Bound(Peek().text)) {
    out = term::Const(Value::Symbol(Next().text));
  } else {
    out = term::Drop(Expr());
  }
  ExpectPunct(")");
  return out;
}

TermPtr Parser::TreeChild() {
  if (AcceptKeyword("XI")) return term::Hole();
  if (AcceptPunct("[")) {
    TermPtr t = Expr();
    ExpectPunct("]");
    return t;
  }
  std::string label = ExpectIdent("a tree label");
  if (IsPunct("<")) return TreeLiteral(label);
  if (AcceptPunct("(")) {
    TermPtr v = Expr();
    ExpectPunct(")");
    return term::TreeLit(label, v, {});
  }
  return term::TreeLit(label, nullptr, {});
}

TermPtr Parser::TreeLiteral(const std::string& label) {
  ExpectPunct("<");
  std::vector<TermPtr> kids;
  if (!IsPunct(">")) {
    do {
      kids.push_back(TreeChild());
    } while (AcceptPunct(","));
  }
  ExpectPunct(">");
  return term::TreeLit(label, nullptr, std::move(kids));
}

TermPtr Parser::Identifier() {
  const Token& at = Next();
  const std::string& name = at.text;
  if (name == "true") return term::Const(Value::True());
  if (name == "false") return term::Const(Value::False());
  if (name == "undef") return term::Const(Value());
  if (IsPunct("<") && !Bound(name)) return TreeLiteral(name);
  if (Bound(name)) {
    if (IsPunct("(")) return term::Apply(term::Var(name), ArgList());
    return term::Var(name);
  }
  if (auto arity = sig_.ArityOf(name)) {
    std::vector<TermPtr> args;
    if (IsPunct("(")) args = ArgList();
    if (args.size() != *arity) {
      Fail(name + " expects " + std::to_string(*arity) + " arguments, got " +
               std::to_string(args.size()),
           at);
    }
    return term::App(name, std::move(args));
  }
  if (IsBuiltin(name)) {
    if (!IsPunct("(")) Fail("builtin '" + name + "' needs arguments", at);
    return term::App(name, CallArgs(name));
  }
  if (bg_.domains.count(name)) return term::Domain(name);
  if (IsPunct("(")) Fail("unknown function '" + name + "'", at);
  return term::Const(Value::AtomV(name));
}

TermPtr Parser::Primary() {
  const Token& t = Peek();
  switch (t.type) {
    case Tok::kInt:
      return term::Const(Value::NatV(ExpectInt()));
    case Tok::kIdent:
      return Identifier();
    case Tok::kEnd:
      Fail("unexpected end of input");
    case Tok::kPunct:
      if (AcceptPunct("(")) {
        TermPtr inner;
        if (IsKeyword("IOTA")) {
          inner = Binder(Term::Kind::kIota);
        } else if (IsKeyword("EXISTS")) {
          inner = Binder(Term::Kind::kExists);
        } else {
          inner = Expr();
        }
        ExpectPunct(")");
        return inner;
      }
      if (AcceptPunct("{")) return Comprehension();
      Fail("unexpected " + Describe(t));
    case Tok::kKeyword:
      break;
  }
  Next();
  if (t.text == "DROP") return DropTerm();
  if (t.text == "RAISE") {
    ExpectPunct("(");
    TermPtr inner = term::Raise(Expr());
    ExpectPunct(")");
    if (IsPunct("(")) return term::Apply(inner, ArgList());
    return inner;
  }
  if (t.text == "SYM") {
    ExpectPunct("(");
    std::string f = ExpectIdent("a function name");
    ExpectPunct(")");
    return term::Sym(f);
  }
  if (t.text == "NODE") {
    TermPtr n = term::Subloc(NodePath());
    if (IsPunct("(")) return term::Apply(n, ArgList());
    return n;
  }
  if (t.text == "OP") {
    ExpectPunct("(");
    const Token& ot = Peek();
    std::string op = OperatorName();
    if (!FindOperator(op)) Fail("unknown operator '" + op + "'", ot);
    std::vector<TermPtr> args;
    while (AcceptPunct(",")) args.push_back(Expr());
    ExpectPunct(")");
    return term::OpApp(op, std::move(args));
  }
  if (t.text == "LABEL") {
    ExpectPunct("(");
    std::string l = ExpectIdent("a label");
    ExpectPunct(")");
    return term::Const(Value::Label(l));
  }
  if (t.text == "LEAF") {
    ExpectPunct("(");
    std::string l = ExpectIdent("a label");
    ExpectPunct(",");
    TermPtr v = Expr();
    ExpectPunct(")");
    return term::TreeLit(l, v, {});
  }
  if (t.text == "XI") return term::Hole();
  Fail("unexpected " + Describe(t), t);
}

// Base set ----------------------------------------------------------------------

void CollectAtoms(const Value& v, std::set<Value>& out) {
  switch (v.kind()) {
    case Value::Kind::kAtom:
      out.insert(v);
      break;
    case Value::Kind::kTuple:
      for (const auto& x : v.as_tuple()) CollectAtoms(x, out);
      break;
    case Value::Kind::kSet:
      for (const auto& x : v.as_set()) CollectAtoms(x, out);
      break;
    default:
      break;
  }
}

void CollectAtoms(const Rule& r, std::set<Value>& out) {
  WalkTerms(r, [&](const Term& t) {
    Walk(t, [&](const Term& x) {
      if (x.kind == Term::Kind::kConst) CollectAtoms(x.value, out);
    });
  });
}

}  // namespace

Program Parse(std::string_view text) {
  Parser p(Lex(text), Signature(), Background());
  return p.ParseProgram();
}

RulePtr ParseRule(std::string_view text, const Signature& sig,
                  const Background& background) {
  Parser p(Lex(text), sig, background);
  return p.ParseRuleOnly();
}

TermPtr ParseTerm(std::string_view text, const Signature& sig,
                  const Background& background) {
  Parser p(Lex(text), sig, background);
  return p.ParseTermOnly();
}

Machine BuildMachine(const Program& program) {
  std::set<Value> base;
  for (const auto& [name, elems] : program.background.domains) {
    for (const auto& v : elems) CollectAtoms(v, base);
  }
  CollectAtoms(*program.rule, base);
  CollectAtoms(*program.init, base);

  State s(program.signature, std::move(base), program.background);
  s.Set(Location::Self(),
        Value::OfTree(EncodeSelf(program.signature, *program.rule)));
  Execution init = Execute(*program.init, s);
  if (!init.collapsed.ok()) {
    throw RuleError("INIT clashes at " +
                    ToString(init.collapsed.clash->location) + ": " +
                    init.collapsed.clash->reason);
  }
  Machine m;
  m.initial = ApplyUpdateSet(s, init.collapsed.updates);
  m.max_steps = program.max_steps.value_or(DefaultMaxSteps());
  m.seed = program.seed;
  return m;
}

std::string PrintProgram(const Program& program) {
  std::ostringstream out;
  if (!program.background.domains.empty()) {
    out << "DOMAINS\n";
    for (const auto& [name, elems] : program.background.domains) {
      out << "  " << name << " = {";
      for (std::size_t i = 0; i < elems.size(); ++i) {
        if (i > 0) out << ", ";
        out << ToString(elems[i]);
      }
      out << "}\n";
    }
  }
  std::string sig = PrintSignature(program.signature);
  if (!sig.empty()) out << "SIGNATURE\n  " << sig << "\n";
  if (!(program.init->kind == Rule::Kind::kPar && program.init->body.empty())) {
    out << "INIT\n" << PrintRule(*program.init, 1);
  }
  out << "RULE\n" << PrintRule(*program.rule, 1);
  if (program.max_steps || program.seed != 0) {
    out << "OPTIONS\n";
    if (program.max_steps) out << "  max_steps = " << *program.max_steps << "\n";
    if (program.seed != 0) out << "  seed = " << program.seed << "\n";
  }
  return out.str();
}

bool Equal(const Program& a, const Program& b) {
  return a.signature == b.signature && a.background == b.background &&
         rsasm::Equal(*a.init, *b.init) && rsasm::Equal(*a.rule, *b.rule) &&
         a.max_steps == b.max_steps && a.seed == b.seed;
}

}  // namespace rsasm::frontend
