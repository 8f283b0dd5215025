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


#include "fixtures.h"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <sstream>

#include "rsasm/error.h"
#include "rsasm/parser.h"
#include "rsasm/printer.h"
#include "rsasm/probe.h"
#include "rsasm/reflect.h"
#include "rsasm/structures.h"
#include "rsasm/tree_diff.h"
#include "rsasm/treealg.h"

namespace rsasm::testing {
namespace {

const std::vector<std::string> kParityDomain = {"a", "b", "c", "d", "e", "f"};
const std::vector<std::string> kJoinDomain = {"d1", "d2", "d3"};
const std::vector<std::string> kAttrs = {"at1", "at2", "at3"};

bool Fail(std::string* why, const std::string& msg) {
  if (why) *why = msg;
  return false;
}

std::string Join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

// Every row of length k over the join domain, in lexicographic order.
std::vector<Row> AllRows(std::size_t k) {
  std::vector<Row> rows = {{}};
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Row> next;
    for (const auto& r : rows) {
      for (const auto& d : kJoinDomain) {
        Row x = r;
        x.push_back(d);
        next.push_back(std::move(x));
      }
    }
    rows = std::move(next);
  }
  return rows;
}

std::vector<Value> Atoms(const Row& r) {
  std::vector<Value> out;
  for (const auto& x : r) out.push_back(Value::AtomV(x));
  return out;
}

std::string Relation(const std::string& name,
                     const std::vector<std::string>& attrs,
                     const std::set<Row>& rows) {
  std::ostringstream out;
  for (std::size_t i = 0; i < attrs.size(); ++i) {
    out << "  index(DROP(" << name << "), " << attrs[i] << ") := " << i + 1
        << "\n";
  }
  for (const auto& r : AllRows(attrs.size())) {
    out << "  " << name << "(" << Join(r, ", ") << ") := "
        << (rows.count(r) ? "true" : "false") << "\n";
  }
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < attrs.size(); ++i) {
      out << "  " << name << "h(" << attrs[i] << ", " << Join(r, ", ")
          << ") := " << r[i] << "\n";
    }
  }
  return out.str();
}

std::string RelationTest(const std::string& name, std::size_t arity) {
  std::vector<std::string> args;
  for (std::size_t i = 1; i <= arity; ++i) {
    args.push_back("proj(T, index(J, (IOTA b IN Attr . index(DROP(" + name +
                   "), b) = " + std::to_string(i) + ")))");
  }
  return name + "(" + Join(args, ", ") + ") = true";
}

double Millis(std::chrono::steady_clock::duration d) {
  return std::chrono::duration<double, std::milli>(d).count();
}

void CollectTerms(const TermPtr& t, std::vector<TermPtr>& out) {
  if (!t) return;
  out.push_back(t);
  for (const auto& a : t->args) CollectTerms(a, out);
  CollectTerms(t->leaf, out);
}

void CollectTerms(const Rule& r, std::vector<TermPtr>& out) {
  CollectTerms(r.head, out);
  for (const auto& a : r.args) CollectTerms(a, out);
  CollectTerms(r.rhs, out);
  for (const auto& a : r.operands) CollectTerms(a, out);
  for (const auto& b : r.body) CollectTerms(*b, out);
}

bool SameTerms(const std::vector<TermPtr>& a, const std::vector<TermPtr>& b,
               std::string* why) {
  if (a.size() != b.size()) {
    return Fail(why, "beta length " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!Equal(*a[i], *b[i])) {
      return Fail(why, "beta component " + std::to_string(i) + ": " +
                           frontend::PrintTerm(*a[i]) + " vs " + frontend::PrintTerm(*b[i]));
    }
  }
  return true;
}

std::size_t HoleCount(const Context& c) { return c.tree().Holes().size(); }

}  // namespace

std::string ProgramPath(const std::string& name) {
  return std::string(RSASM_PROGRAMS_DIR) + "/" + name;
}

std::string ReadProgram(const std::string& name) {
  std::ifstream in(ProgramPath(name));
  if (!in) throw std::runtime_error("cannot open " + ProgramPath(name));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Trace RunSource(const std::string& source) {
  return Run(frontend::BuildMachine(frontend::Parse(source)));
}

std::string ParitySource(std::uint32_t mask) {
  std::istringstream in(ReadProgram("parity.rsasm"));
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    for (std::size_t i = 0; i < kParityDomain.size(); ++i) {
      std::string prefix = "  set(" + kParityDomain[i] + ") := ";
      if (line.rfind(prefix, 0) == 0) {
        line = prefix + ((mask >> i) & 1 ? "true" : "false");
      }
    }
    out << line << "\n";
  }
  return out.str();
}

bool CheckParityCase(std::uint32_t mask, std::string* why, double max_ms) {
  std::string source = ParitySource(mask);
  auto start = std::chrono::steady_clock::now();
  Trace trace = RunSource(source);
  double ms = Millis(std::chrono::steady_clock::now() - start);
  std::uint64_t members = static_cast<std::uint64_t>(__builtin_popcount(mask));
  std::string tag = "mask " + std::to_string(mask) + ": ";
  if (trace.status != RunStatus::kFixpoint) {
    return Fail(why, tag + "status " + ToString(trace.status) + " " +
                         trace.error);
  }
  if (trace.steps.size() > 6) {
    return Fail(why, tag + std::to_string(trace.steps.size()) + " steps");
  }
  if (ms > max_ms) return Fail(why, tag + std::to_string(ms) + " ms");
  Value parity = trace.final_state.Get(Location{"parity", {}, {}});
  Value card = trace.final_state.Get(Location{"card", {}, {}});
  if (!(parity == Value::NatV(members % 2))) {
    return Fail(why, tag + "parity " + ToString(parity));
  }
  if (!(card == Value::NatV(members))) {
    return Fail(why, tag + "card " + ToString(card));
  }
  return true;
}

JoinCase BundledJoinCase() {
  JoinCase c;
  c.attrs1 = {"at1", "at2"};
  c.attrs2 = {"at2", "at3"};
  c.r1 = {{"d1", "d2"}, {"d2", "d2"}, {"d3", "d1"}};
  c.r2 = {{"d1", "d1"}, {"d2", "d3"}};
  return c;
}

JoinCase RandomJoinCase(gen::Rng& rng) {
  auto schema = [&] {
    std::vector<std::string> attrs = kAttrs;
    std::shuffle(attrs.begin(), attrs.end(), rng);
    attrs.resize(gen::Uniform(rng, 1, attrs.size()));
    return attrs;
  };
  auto rows = [&](std::size_t k) {
    std::vector<Row> all = AllRows(k);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(gen::Uniform(rng, 0, std::min<std::size_t>(8, all.size())));
    return std::set<Row>(all.begin(), all.end());
  };
  JoinCase c;
  c.attrs1 = schema();
  c.attrs2 = schema();
  c.r1 = rows(c.attrs1.size());
  c.r2 = rows(c.attrs2.size());
  return c;
}

std::string JoinSource(const JoinCase& c) {
  std::string bundled = ReadProgram("join.rsasm");
  std::size_t rule = bundled.find("\nRULE\n");
  std::size_t branch = bundled.find("    IF mode = join THEN");
  std::size_t n = JoinLayout(c).size();
  std::vector<std::string> xs;
  for (std::size_t i = 1; i <= n; ++i) xs.push_back("x" + std::to_string(i));
  std::string vars = Join(xs, ", ");

  std::ostringstream out;
  out << "DOMAINS\n  D = {" << Join(kJoinDomain, ", ") << "}\n  Attr = {"
      << Join(kAttrs, ", ") << "}\n\nSIGNATURE\n  index/2, R1/"
      << c.attrs1.size() << ", R1h/" << c.attrs1.size() + 1 << ", R2/"
      << c.attrs2.size() << ", R2h/" << c.attrs2.size() + 1
      << ", mode/0\n\nINIT\n  mode := init\n"
      << Relation("R1", c.attrs1, c.r1) << Relation("R2", c.attrs2, c.r2);
  out << bundled.substr(rule, branch - rule);
  out << "    IF mode = join THEN\n"
         "      LET sig = (IOTA s IN SELF . has_label(s, signature)) IN\n"
         "        LET k = card({p IN SELF | has_label(parent(p), "
         "signature)}) IN\n"
         "          LET J = value(child_at(child_at(sig, k - 1), 1)),\n"
         "              JH = value(child_at(child_at(sig, k), 1)) IN\n"
         "            PAR\n";
  for (const auto& x : xs) out << "PARFOR " << x << " IN D\n";
  out << "LET T = tuple(" << vars << ") IN\n"
      << "IF " << RelationTest("R1", c.attrs1.size()) << " AND "
      << RelationTest("R2", c.attrs2.size()) << " THEN\n"
      << "PAR\n"
      << "RAISE(J)(" << vars << ") := true\n"
      << "PARFOR a IN Attr\n"
      << "IF index(J, a) != undef THEN\n"
      << "RAISE(JH)(a, " << vars << ") := proj(T, index(J, a))\n"
      << "ENDIF\nENDPARFOR\nENDPAR\nENDIF\n";
  for (std::size_t i = 0; i < n; ++i) out << "ENDPARFOR\n";
  out << "mode := halt\nENDPAR\nENDIF\nENDIF\n";
  return out.str();
}

std::vector<std::string> JoinLayout(const JoinCase& c) {
  std::vector<std::string> layout = c.attrs1;
  for (const auto& a : c.attrs2) {
    if (std::find(c.attrs1.begin(), c.attrs1.end(), a) == c.attrs1.end()) {
      layout.push_back(a);
    }
  }
  return layout;
}

std::set<Row> JoinOracle(const JoinCase& c) {
  std::vector<std::string> layout = JoinLayout(c);
  std::set<Row> out;
  for (const auto& x : c.r1) {
    for (const auto& y : c.r2) {
      std::map<std::string, std::string> binding;
      for (std::size_t i = 0; i < c.attrs1.size(); ++i) {
        binding[c.attrs1[i]] = x[i];
      }
      bool agree = true;
      for (std::size_t i = 0; i < c.attrs2.size(); ++i) {
        auto [it, fresh] = binding.emplace(c.attrs2[i], y[i]);
        if (!fresh && it->second != y[i]) agree = false;
      }
      if (!agree) continue;
      Row row;
      for (const auto& a : layout) row.push_back(binding[a]);
      out.insert(row);
    }
  }
  return out;
}

bool CheckJoinCase(const JoinCase& c, std::string* why) {
  Trace trace = RunSource(JoinSource(c));
  if (trace.status != RunStatus::kFixpoint) {
    return Fail(why, std::string("status ") + ToString(trace.status) + " " +
                         trace.error);
  }
  const State& s = trace.final_state;
  Signature sig = DecodeSignature(SignatureOfSelf(s.GetSelf().as_tree()));
  const auto& syms = sig.symbols();
  std::vector<std::string> layout = JoinLayout(c);
  std::uint32_t n = static_cast<std::uint32_t>(layout.size());
  if (syms.size() < 2) return Fail(why, "signature too short");
  const FunctionSymbol& j = syms[syms.size() - 2];
  const FunctionSymbol& jh = syms.back();
  if (j.arity != n || jh.arity != n + 1) {
    return Fail(why, "arities " + std::to_string(j.arity) + "/" +
                         std::to_string(jh.arity) + ", expected " +
                         std::to_string(n) + "/" + std::to_string(n + 1));
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    Value idx = s.Get(Location{
        "index", {Drop(term::Sym(j.name)), Value::AtomV(layout[i])}, {}});
    if (!(idx == Value::NatV(i + 1))) {
      return Fail(why, "index of " + layout[i] + " is " + ToString(idx));
    }
  }
  std::set<Row> expected = JoinOracle(c);
  std::set<Row> got;
  std::size_t hat_entries = 0;
  for (const auto& [loc, v] : s.interp()) {
    if (loc.symbol == j.name) {
      Row r;
      for (const auto& a : loc.args) r.push_back(a.as_atom());
      if (!v.is_true()) return Fail(why, "non-true entry in J");
      got.insert(r);
    } else if (loc.symbol == jh.name) {
      ++hat_entries;
      std::string attr = loc.args[0].as_atom();
      std::size_t pos = static_cast<std::size_t>(
          std::find(layout.begin(), layout.end(), attr) - layout.begin());
      if (pos == layout.size() || !(v == loc.args[pos + 1])) {
        return Fail(why, "bad projection " + ToString(loc) + " = " +
                             ToString(v));
      }
    }
  }
  if (got != expected) {
    return Fail(why, "J has " + std::to_string(got.size()) +
                         " rows, oracle " + std::to_string(expected.size()));
  }
  if (hat_entries != expected.size() * n) {
    return Fail(why, "projection relation has " +
                         std::to_string(hat_entries) + " entries");
  }
  return true;
}

bool TreeLawTrial(gen::Rng& rng, std::string* why) {
  try {
    Tree t = gen::RandomTree(rng, 20);
    NodeId o = static_cast<NodeId>(gen::Uniform(rng, 0, t.size() - 1));
    Tree sub = Subtree(t, o);
    if (!(Subtree(t, t.root()) == t)) return Fail(why, "subtree of root");
    if (!(SubstTT(t, o, sub) == t)) return Fail(why, "subst_tt identity");
    Context hole = SubstTC(t, o);
    if (HoleCount(hole) != 1) return Fail(why, "subst_tc hole count");
    if (!(SubstCT(hole, sub) == t)) return Fail(why, "subst_tc/subst_ct");
    if (!(InjectHedge(hole, {sub}) == t)) return Fail(why, "inject identity");
    if (o != t.root()) {
      std::vector<NodeId> ancestors;
      for (auto p = t.parent(o); p; p = t.parent(*p)) ancestors.push_back(*p);
      NodeId a = ancestors[gen::Uniform(rng, 0, ancestors.size() - 1)];
      Context c = ContextOf(t, a, o);
      if (HoleCount(c) != 1) return Fail(why, "context_of hole count");
      if (!(InjectHedge(c, {sub}) == Subtree(t, a))) {
        return Fail(why, "inject_hedge after context_of");
      }
      if (!(SubstCT(c, sub) == Subtree(t, a))) {
        return Fail(why, "subst_ct after context_of");
      }
    }

    Context c1 = gen::RandomContext(rng, 7);
    Context c2 = gen::RandomContext(rng, 7);
    Context c3 = gen::RandomContext(rng, 6);
    Tree u = gen::RandomTree(rng, 5);
    Context c12 = SubstCC(c1, c2);
    if (HoleCount(c12) != 1) return Fail(why, "subst_cc hole count");
    if (c12.tree().size() != c1.tree().size() + c2.tree().size() - 1) {
      return Fail(why, "subst_cc size");
    }
    if (!(SubstCC(c12, c3) == SubstCC(c1, SubstCC(c2, c3)))) {
      return Fail(why, "subst_cc associativity");
    }
    if (!(SubstCT(c12, u) == SubstCT(c1, SubstCT(c2, u)))) {
      return Fail(why, "subst_ct over subst_cc");
    }
    if (!(InjectContext(c1, c2) == c12)) return Fail(why, "inject_context");
    if (!(SubstCC(Context::Trivial(), c1) == c1) ||
        !(SubstCC(c1, Context::Trivial()) == c1)) {
      return Fail(why, "trivial context identity");
    }

    Hedge h1 = gen::RandomHedge(rng, 3, 4);
    Hedge h2 = gen::RandomHedge(rng, 3, 4);
    Hedge h3 = gen::RandomHedge(rng, 3, 4);
    if (!(Concat(Concat(h1, h2), h3) == Concat(h1, Concat(h2, h3)))) {
      return Fail(why, "concat associativity");
    }
    if (!(Concat(h1, {}) == h1) || !(Concat({}, h1) == h1)) {
      return Fail(why, "concat identity");
    }
    Tree lh = LabelHedge("a", h1);
    if (lh.label(lh.root()) != "a" || !(ChildHedge(lh) == h1)) {
      return Fail(why, "label_hedge");
    }
    Context lc = LabelContext("b", c1);
    if (HoleCount(lc) != 1 || lc.tree().label(lc.tree().root()) != "b" ||
        !(ChildHedge(lc.tree()) == Hedge{c1.tree()})) {
      return Fail(why, "label_context");
    }
    if (!(InjectHedge(LabelContext("a", Context::Trivial()), h1) == lh)) {
      return Fail(why, "inject_hedge into label_context");
    }
    if (!c12.is_trivial()) {
      Tree spliced = InjectHedge(c12, Concat(h1, h2));
      std::size_t hedge_nodes = 0;
      for (const auto& x : Concat(h1, h2)) hedge_nodes += x.size();
      if (spliced.size() != c12.tree().size() - 1 + hedge_nodes) {
        return Fail(why, "inject_hedge size");
      }
    }
    if (!(InjectHedge(c1, {u}) == SubstCT(c1, u))) {
      return Fail(why, "inject_hedge single tree");
    }

    if (!lc.is_trivial()) {
      Hedge kids = ChildHedge(lc.tree());
      Context l = LeftExtend(h1, lc);
      Context r = RightExtend(h1, lc);
      if (HoleCount(l) != 1 || HoleCount(r) != 1) {
        return Fail(why, "extend hole count");
      }
      if (!(ChildHedge(l.tree()) == Concat(h1, kids)) ||
          !(ChildHedge(r.tree()) == Concat(kids, h1))) {
        return Fail(why, "extend children");
      }
      if (!(LeftExtend(h2, LeftExtend(h1, lc)) ==
            LeftExtend(Concat(h2, h1), lc))) {
        return Fail(why, "left_extend composition");
      }
      if (!(RightExtend(h2, RightExtend(h1, lc)) ==
            RightExtend(Concat(h1, h2), lc))) {
        return Fail(why, "right_extend composition");
      }
    }
    if (t.is_leaf(t.root()) && !t.value(t.root()).is_undef()) {
      if (!h1.empty()) {
        try {
          RightExtendTree(t, h1);
          return Fail(why, "a valued leaf accepted children");
        } catch (const TreeError&) {
        }
      }
    } else if (!(ChildHedge(RightExtendTree(t, h1)) ==
                 Concat(ChildHedge(t), h1)) ||
               !(ChildHedge(LeftExtendTree(t, h1)) ==
                 Concat(h1, ChildHedge(t)))) {
      return Fail(why, "tree extension");
    }
    try {
      LeftExtend(h1, Context::Trivial());
      return Fail(why, "left_extend accepted a trivial context");
    } catch (const TreeError&) {
    }
  } catch (const Error& e) {
    return Fail(why, std::string("exception: ") + e.what());
  }
  return true;
}

std::vector<TermPtr> BetaOracle(const Rule& r) {
  std::vector<TermPtr> out;
  auto append = [&](const std::vector<TermPtr>& more) {
    out.insert(out.end(), more.begin(), more.end());
  };
  switch (r.kind) {
    case Rule::Kind::kAssign:
      out.push_back(r.rhs);
      append(r.args);
      break;
    case Rule::Kind::kIf:
      out.push_back(r.rhs);
      append(BetaOracle(*r.body[0]));
      append(BetaOracle(*r.body[1]));
      break;
    case Rule::Kind::kPar:
      for (const auto& b : r.body) append(BetaOracle(*b));
      break;
    case Rule::Kind::kLet:
      out.push_back(r.rhs);
      append(BetaOracle(*Substitute(r.body[0], r.var, r.rhs)));
      break;
    case Rule::Kind::kPartial: {
      append(r.args);
      TermPtr current = r.head->kind == Term::Kind::kSym
                            ? term::App(r.head->name, r.args)
                            : term::Apply(r.head, r.args);
      std::vector<TermPtr> op_args = {current};
      op_args.insert(op_args.end(), r.operands.begin(), r.operands.end());
      out.push_back(term::OpApp(r.op, std::move(op_args)));
      break;
    }
  }
  return out;
}

bool ReflectionTrial(gen::Rng& rng, std::string* why) {
  try {
    const gen::World& world = gen::ProbeWorld();
    RulePtr r = gen::RandomRule(rng, world);
    Tree enc = EncodeRule(*r);
    if (!Equal(*DecodeRule(enc), *r)) return Fail(why, "decode(encode(r))");
    Signature sig = world.signature;
    for (std::uint64_t i = 0, k = gen::Uniform(rng, 0, 3); i < k; ++i) {
      sig.Add({std::string(kReservePrefix) + std::to_string(i),
               static_cast<std::uint32_t>(gen::Uniform(rng, 0, 3))});
    }
    if (!(DecodeSignature(EncodeSignature(sig)) == sig)) {
      return Fail(why, "decode(encode(sig))");
    }
    Tree self = EncodeSelf(sig, *r);
    if (!(DecodeSignature(SignatureOfSelf(self)) == sig) ||
        !Equal(*DecodeRule(RuleOfSelf(self)), *r)) {
      return Fail(why, "self round trip");
    }
    Value dropped = DropRule(*r);
    if (!Equal(*RaiseRule(dropped), *r)) return Fail(why, "raise(drop(r))");
    if (!(DropRule(*RaiseRule(dropped)) == dropped)) {
      return Fail(why, "drop(raise(v)) for a rule");
    }
    std::vector<TermPtr> terms;
    CollectTerms(*r, terms);
    for (const auto& t : terms) {
      if (t->kind == Term::Kind::kHole) continue;
      Value v = Drop(t);
      if (!Equal(*Raise(v), *t)) {
        return Fail(why, "raise(drop(t)) for " + frontend::PrintTerm(*t));
      }
      if (!(Drop(Raise(v)) == v)) {
        return Fail(why, "drop(raise(v)) for " + frontend::PrintTerm(*t));
      }
    }
    if (!SameTerms(Beta(enc), BetaOracle(*r), why)) return false;
    if (!SameTerms(Beta(RuleOfSelf(self)), BetaOracle(*r), why)) return false;
  } catch (const Error& e) {
    return Fail(why, std::string("exception: ") + e.what());
  }
  return true;
}

bool TreeDiffTrial(gen::Rng& rng, std::string* why) {
  try {
    const gen::World& world = gen::ProbeWorld();
    RulePtr r1 = gen::RandomRule(rng, world);
    RulePtr r2 = r1;
    Signature sig2 = world.signature;
    switch (gen::Uniform(rng, 0, 3)) {
      case 0:
        r2 = gen::RandomRule(rng, world);
        break;
      case 1:
        r2 = rule::Par({r1, gen::RandomRule(rng, world, 2)});
        break;
      case 2:
        sig2.Add({std::string(kReservePrefix) + "0",
                  static_cast<std::uint32_t>(gen::Uniform(rng, 0, 3))});
        break;
      default:
        break;
    }
    Tree t = EncodeSelf(world.signature, *r1);
    Tree t2 = EncodeSelf(sig2, *r2);
    AlgebraPtr theta = TreeDiff(t, t2);
    if (!(EvalAlgebraTree(*theta, t) == t2)) {
      return Fail(why, "eval(theta, t) != t2 for " + ToString(*theta));
    }
    RulePtr update = TreeUpdateRule(t, t2);
    State s = gen::RandomState(rng, world, *r1);
    Execution ex = Execute(*update, s);
    if (!ex.collapsed.ok()) {
      return Fail(why, "update rule clashes: " + ex.collapsed.clash->reason);
    }
    UpdateSet expected = {Update{Location::Self(), Value::OfTree(t2)}};
    if (!(ex.collapsed.updates == expected)) {
      return Fail(why, "update rule yields " +
                           std::to_string(ex.collapsed.updates.size()) +
                           " updates, not (self, t2)");
    }
  } catch (const Error& e) {
    return Fail(why, std::string("exception: ") + e.what());
  }
  return true;
}

bool CheckFixtureTrace(const std::string& name, std::string* why) {
  std::string source = ReadProgram(name);
  Trace a = RunSource(source);
  Trace b = RunSource(source);
  if (TraceToJson(a).dump() != TraceToJson(b).dump()) {
    return Fail(why, name + ": trace bytes differ between runs");
  }
  std::string reason;
  if (!CheckTrace(a, &reason)) return Fail(why, name + ": " + reason);
  return true;
}

std::vector<State> FixtureStates() {
  std::vector<State> out;
  for (const char* name : {"parity.rsasm", "join.rsasm"}) {
    Trace t = RunSource(ReadProgram(name));
    for (const auto& s : t.steps) out.push_back(s.state);
    out.push_back(t.final_state);
  }
  return out;
}

}  // namespace rsasm::testing
