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

#include <gtest/gtest.h>

#include <set>

#include "fixtures.h"
#include "rsasm/error.h"
#include "rsasm/parser.h"
#include "rsasm/printer.h"
#include "rsasm/reflect.h"
#include "rsasm/reserve.h"

namespace rsasm::testing {
namespace {

Signature Sig() { return Signature({{kSelf, 0}, {"f", 1}, {"n", 0}}); }

RulePtr R(const std::string& text) {
  frontend::Program p = frontend::Parse(
      "DOMAINS\n  D = {a, b}\nSIGNATURE\n  f/1, n/0\nRULE\n  PAR ENDPAR\n");
  return frontend::ParseRule(text, Sig(), p.background);
}

std::vector<std::string> Printed(const std::vector<TermPtr>& ts) {
  std::vector<std::string> out;
  for (const auto& t : ts) out.push_back(frontend::PrintTerm(*t));
  return out;
}

TEST(EncodeTest, RuleShapes) {
  EXPECT_EQ(ToString(EncodeRule(*R("f(a) := n"))),
            "update<func(DROP(f)), term(TUPLE(a)), term(TUPLE(DROP(n)))>");
  Tree sig = EncodeSignature(Sig());
  EXPECT_EQ(ToString(sig),
            "signature<func<name(DROP(self)), arity(0)>, "
            "func<name(DROP(f)), arity(1)>, "
            "func<name(DROP(n)), arity(0)>>");
  EXPECT_EQ(DecodeSignature(sig), Sig());
}

TEST(EncodeTest, MalformedTreesAreRejected) {
  EXPECT_THROW(DecodeRule(Tree::Leaf("update")), ReflectError);
  EXPECT_THROW(DecodeRule(Tree::Node("bogus", {})), ReflectError);
  Tree dup = Tree::Node("signature", {FuncEntry("g", 1), FuncEntry("g", 2)});
  EXPECT_THROW(DecodeSignature(dup), ReflectError);
}

TEST(DropRaiseTest, InverseOnTermsAndRules) {
  RulePtr r = R("IF f(a) = n THEN n := n + 1 ELSE f(b) := a ENDIF");
  Value v = DropRule(*r);
  EXPECT_TRUE(Equal(*RaiseRule(v), *r));
  EXPECT_EQ(Drop(Raise(Value::NatV(3))), Value::NatV(3));
  EXPECT_THROW(Raise(Value::OfTuple({Value::NatV(1)})), ReflectError);
}

TEST(BetaTest, UpdateEquation) {
  EXPECT_EQ(Printed(Beta(EncodeRule(*R("f(a) := n")))),
            (std::vector<std::string>{"n", "a"}));
}

TEST(BetaTest, ConditionalEquation) {
  EXPECT_EQ(Printed(Beta(EncodeRule(
                *R("IF n = 1 THEN f(a) := 1 ELSE f(b) := 2 ENDIF")))),
            (std::vector<std::string>{"(n = 1)", "1", "a", "2", "b"}));
}

TEST(BetaTest, ParallelEquation) {
  EXPECT_TRUE(Beta(EncodeRule(*rule::Par())).empty());
  EXPECT_EQ(Printed(Beta(EncodeRule(*R("PAR\n n := 1\n f(a) := 2\nENDPAR")))),
            (std::vector<std::string>{"1", "2", "a"}));
}

TEST(BetaTest, LetEquationSubstitutesEagerly) {
  EXPECT_EQ(Printed(Beta(EncodeRule(*R("LET x = f(a) IN n := x")))),
            (std::vector<std::string>{"f(a)", "f(a)"}));
}

TEST(BetaTest, PartialEquation) {
  EXPECT_EQ(Printed(Beta(EncodeRule(*R("f(a) <=[+] 2")))),
            (std::vector<std::string>{"a", "OP(+, f(a), 2)"}));
}

TEST(BetaTest, GeneratedRulesCoverEveryEquation) {
  gen::Rng rng(21);
  std::set<Rule::Kind> seen;
  std::function<void(const Rule&)> visit = [&](const Rule& r) {
    seen.insert(r.kind);
    for (const auto& b : r.body) visit(*b);
  };
  for (int i = 0; i < 100; ++i) {
    RulePtr r = gen::RandomRule(rng, gen::ProbeWorld());
    visit(*r);
  }
  EXPECT_EQ(seen.size(), 5u);
}

TEST(ReflectionTest, RandomizedRoundTrips) {
  gen::Rng rng(22);
  for (int i = 0; i < 200; ++i) {
    std::string why;
    ASSERT_TRUE(ReflectionTrial(rng, &why)) << "trial " << i << ": " << why;
  }
}

TEST(SelfTest, ShapeAndAccessors) {
  Tree self = EncodeSelf(Sig(), *R("n := 1"));
  EXPECT_NO_THROW(CheckSelfShape(self));
  EXPECT_EQ(RuleOfSelf(self), RuleOfSelfByScan(self));
  EXPECT_EQ(SignatureOfSelf(self), SignatureOfSelfByScan(self));
  EXPECT_THROW(CheckSelfShape(Tree::Node("self", {})), ReflectError);
}

TEST(ReserveTest, FreshNamesAvoidTheSignature) {
  Signature sig({{kSelf, 0}, {"f$0", 1}, {"f$3", 0}});
  ReserveAllocator reserve(sig);
  std::string a = reserve.Allocate();
  std::string b = reserve.Allocate();
  EXPECT_EQ(a, "f$4");
  EXPECT_EQ(b, "f$5");
}

}  // namespace
}  // namespace rsasm::testing
