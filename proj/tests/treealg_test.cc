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

#include "fixtures.h"
#include "rsasm/error.h"
#include "rsasm/treealg.h"

namespace rsasm::testing {
namespace {

// a<b(1), c<d, e>>
Tree Sample() {
  return Tree::Node("a", {Tree::Leaf("b", Value::NatV(1)),
                          Tree::Node("c", {Tree::Leaf("d"), Tree::Leaf("e")})});
}

TEST(TreeTest, PathsAndNavigation) {
  Tree t = Sample();
  NodeId c = t.At({1});
  EXPECT_EQ(t.label(c), "c");
  EXPECT_EQ(t.PathOf(t.At({1, 1})), (Path{1, 1}));
  EXPECT_EQ(t.depth(t.At({1, 0})), 2u);
  EXPECT_EQ(t.sibling_index(c), 1u);
  EXPECT_FALSE(t.Find({2}).has_value());
  EXPECT_EQ(ToString(t), "a<b(1), c<d, e>>");
}

TEST(TreeTest, ValuedNodesMustBeLeaves) {
  EXPECT_THROW(RightExtendTree(Tree::Leaf("x", Value::NatV(1)),
                               {Tree::Leaf("y")}),
               TreeError);
}

TEST(SubstitutionTest, SubtreeAndContext) {
  Tree t = Sample();
  EXPECT_EQ(ToString(Subtree(t, t.At({1}))), "c<d, e>");
  Context c = ContextOf(t, t.root(), t.At({1, 0}));
  EXPECT_EQ(c.tree().Holes().size(), 1u);
  EXPECT_EQ(ToString(SubstCT(c, Tree::Leaf("z"))), "a<b(1), c<z, e>>");
  EXPECT_THROW(ContextOf(t, t.At({0}), t.At({1})), TreeError);
}

TEST(SubstitutionTest, TreeIntoTreeAndContextIntoContext) {
  Tree t = Sample();
  EXPECT_EQ(ToString(SubstTT(t, t.At({0}), Tree::Leaf("q"))),
            "a<q, c<d, e>>");
  Context c1 = SubstTC(t, t.At({1}));
  Context c2 = LabelContext("k", Context::Trivial());
  EXPECT_EQ(ToString(SubstCC(c1, c2).tree()), "a<b(1), k<XI>>");
}

TEST(OperatorTest, HedgeOperators) {
  Hedge h = {Tree::Leaf("x"), Tree::Leaf("y")};
  EXPECT_EQ(ToString(LabelHedge("r", h)), "r<x, y>");
  Context c = LabelContext("r", Context::Trivial());
  EXPECT_EQ(ToString(LeftExtend(h, c).tree()), "r<x, y, XI>");
  EXPECT_EQ(ToString(RightExtend(h, c).tree()), "r<XI, x, y>");
  EXPECT_EQ(ToString(InjectHedge(c, h)), "r<x, y>");
  EXPECT_EQ(Concat(h, h).size(), 4u);
  EXPECT_THROW(InjectHedge(Context::Trivial(), h), TreeError);
}

TEST(OperatorTest, ReplaceNodeSplicesAHedge) {
  Tree t = Sample();
  Tree r = ReplaceNode(t, t.At({1}), {Tree::Leaf("p"), Tree::Leaf("q")});
  EXPECT_EQ(ToString(r), "a<b(1), p, q>");
}

TEST(TreeLawTest, RandomizedLawsHold) {
  gen::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    std::string why;
    ASSERT_TRUE(TreeLawTrial(rng, &why)) << "trial " << i << ": " << why;
  }
}

}  // namespace
}  // namespace rsasm::testing
