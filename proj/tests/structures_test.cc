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

#include "rsasm/error.h"
#include "rsasm/structures.h"
#include "test_util.h"

namespace rsasm::testing {
namespace {

const char kDecls[] =
    "DOMAINS\n  D = {a, b, c}\nSIGNATURE\n  f/1, n/0, m/0\n";

class StructuresTest : public ::testing::Test {
 protected:
  StructuresTest()
      : p_(Declare(kDecls, "  n := 2\n  f(a) := b\n")), s_(InitialState(p_)) {}
  Value E(const std::string& t) { return Eval(p_, s_, t); }

  frontend::Program p_;
  State s_;
};

TEST_F(StructuresTest, ReadsLocationsAndUndef) {
  EXPECT_EQ(E("n"), Value::NatV(2));
  EXPECT_EQ(E("f(a)"), Value::AtomV("b"));
  EXPECT_TRUE(E("f(c)").is_undef());
  EXPECT_TRUE(E("m").is_undef());
  EXPECT_EQ(E("m = undef"), Value::True());
}

TEST_F(StructuresTest, ArithmeticAndComparison) {
  EXPECT_EQ(E("n + 3"), Value::NatV(5));
  EXPECT_EQ(E("n - 1"), Value::NatV(1));
  EXPECT_EQ(E("7 MOD n"), Value::NatV(1));
  EXPECT_EQ(E("lt(n, 3)"), Value::True());
  EXPECT_EQ(E("le(3, n)"), Value::False());
}

TEST_F(StructuresTest, UndefPropagatesThroughArithmetic) {
  EXPECT_TRUE(E("m + 1").is_undef());
}

TEST_F(StructuresTest, ComprehensionsAndTuples) {
  EXPECT_EQ(E("card({x IN D | x != a})"), Value::NatV(2));
  EXPECT_EQ(E("proj(tuple(a, b, c), 3)"), Value::AtomV("c"));
  EXPECT_EQ(E("(IOTA x IN D . f(x) != undef)"), Value::AtomV("a"));
  EXPECT_EQ(E("(EXISTS x IN D . f(x) = a)"), Value::False());
  EXPECT_EQ(E("in(b, {x IN D | x != a})"), Value::True());
}

TEST_F(StructuresTest, SelfNodesAndTreeBuiltins) {
  EXPECT_EQ(E("has_label(NODE[1], rule)"), Value::True());
  EXPECT_EQ(E("depth(NODE[1.0])"), Value::NatV(2));
  EXPECT_EQ(E("child_at(root(), 2)"), E("NODE[1]"));
  EXPECT_EQ(E("parent(NODE[1.0])"), E("NODE[1]"));
  EXPECT_EQ(E("label(NODE[0])"), Value::Label("signature"));
  EXPECT_EQ(E("card({o IN SELF | has_label(o, func)})"), Value::NatV(4));
}

TEST_F(StructuresTest, TreeLiteralsAndAlgebra) {
  Value t = E("right_extend(hedge(w<x>), t<u(1)>)");
  ASSERT_EQ(t.kind(), Value::Kind::kTree);
  EXPECT_EQ(ToString(t.as_tree()), "t<u(1), w<x>>");
}

TEST(UpdateSetTest, ConsistencyAndApplication) {
  UpdateSet ok = {{Loc("n"), Value::NatV(1)}, {Loc("m"), Value::NatV(1)}};
  UpdateSet clash = {{Loc("n"), Value::NatV(1)}, {Loc("n"), Value::NatV(2)}};
  EXPECT_TRUE(IsConsistent(ok));
  EXPECT_FALSE(IsConsistent(clash));

  frontend::Program p = Declare(kDecls, "  n := 2\n");
  State s = InitialState(p);
  State t = ApplyUpdateSet(s, ok);
  EXPECT_EQ(t.Get(Loc("n")), Value::NatV(1));
  EXPECT_EQ(t.Get(Loc("m")), Value::NatV(1));
  EXPECT_EQ(DiffStates(s, t), ok);
  State u = ApplyUpdateSet(t, {{Loc("m"), Value()}});
  EXPECT_TRUE(u.Get(Loc("m")).is_undef());
  EXPECT_EQ(u.interp().count(Loc("m")), 0u);
}

TEST(IsomorphismTest, RenamesBaseElementsEverywhere) {
  frontend::Program p = Declare(kDecls, "  f(a) := b\n  n := c\n");
  State s = InitialState(p);
  Renaming sigma = {{Value::AtomV("a"), Value::AtomV("b")},
                    {Value::AtomV("b"), Value::AtomV("c")},
                    {Value::AtomV("c"), Value::AtomV("a")}};
  State t = ApplyIsomorphism(s, sigma);
  EXPECT_EQ(t.Get(Loc("f", {Value::AtomV("b")})), Value::AtomV("c"));
  EXPECT_EQ(t.Get(Loc("n")), Value::AtomV("a"));
  EXPECT_TRUE(t.Get(Loc("f", {Value::AtomV("a")})).is_undef());
  EXPECT_EQ(t.GetSelf(), s.GetSelf());
}

TEST(NodeAtTest, IndexesByDepthSiblingAndOccurrence) {
  frontend::Program p = Declare(kDecls);
  State s = InitialState(p);
  const Tree& self = s.GetSelf().as_tree();
  EXPECT_EQ(NodeAt(self, 0, 1, 0), Value::Node({1}));
  EXPECT_EQ(NodeAt(self, 1, 0, 0), Value::Node({1, 0}));
  EXPECT_TRUE(NodeAt(self, 1, 0, 1).is_undef());
  EXPECT_TRUE(NodeAt(self, 9, 0, 0).is_undef());
}

}  // namespace
}  // namespace rsasm::testing
