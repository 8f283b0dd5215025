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
#include "rsasm/parser.h"
#include "rsasm/reflect.h"
#include "rsasm/serialize.h"

namespace rsasm::testing {
namespace {

TEST(SerializeTest, ValuesRoundTrip) {
  std::vector<Value> values = {
      Value(),
      Value::True(),
      Value::NatV(42),
      Value::AtomV("a"),
      Value::Symbol("f"),
      Value::Label("rule"),
      Value::Node({1, 0, 2}),
      Value::OfTuple({Value::NatV(1), Value::AtomV("b")}),
      Value::OfSet({Value::NatV(2), Value::NatV(1)}),
      Value::OfTree(Tree::Node("a", {Tree::Leaf("b", Value::NatV(1))})),
      Value::OfHedge({Tree::Leaf("x"), Tree::Leaf("y")}),
  };
  for (const auto& v : values) {
    EXPECT_EQ(ValueFromJson(ToJson(v)), v) << ToJson(v).dump();
  }
}

TEST(SerializeTest, TermsAndRandomTreesRoundTrip) {
  gen::Rng rng(51);
  for (int i = 0; i < 50; ++i) {
    Tree t = gen::RandomTree(rng, 20);
    EXPECT_EQ(TreeFromJson(ToJson(t)), t);
  }
  frontend::Program p = frontend::Parse(ReadProgram("join.rsasm"));
  Value dropped = DropRule(*p.rule);
  EXPECT_EQ(ValueFromJson(ToJson(dropped)), dropped);
}

TEST(SerializeTest, StatesRoundTrip) {
  Trace t = RunSource(ReadProgram("join.rsasm"));
  const State& s = t.final_state;
  State back = StateFromJson(ToJson(s), s);
  EXPECT_EQ(back.interp(), s.interp());
  EXPECT_EQ(back.signature(), s.signature());
}

TEST(SerializeTest, CanonicalFormIsKeyOrdered) {
  Json a = Json::parse(R"({"b": 1, "a": [2, 3]})");
  Json b = Json::parse(R"({"a": [2, 3], "b": 1})");
  EXPECT_EQ(Canonical(a), Canonical(b));
}

TEST(SerializeTest, Sha256KnownVector) {
  EXPECT_EQ(Sha256Hex("abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

}  // namespace
}  // namespace rsasm::testing
