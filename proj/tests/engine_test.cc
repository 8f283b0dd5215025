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

#include <cstdlib>

#include "fixtures.h"
#include "rsasm/error.h"
#include "rsasm/probe.h"
#include "rsasm/reflect.h"
#include "test_util.h"

namespace rsasm::testing {
namespace {

Trace RunText(const std::string& text, std::uint64_t max_steps = 50) {
  Machine m = frontend::BuildMachine(frontend::Parse(text));
  m.max_steps = max_steps;
  return Run(m);
}

TEST(EngineTest, EmptyUpdateSetIsAFixpoint) {
  Trace t = RunText("SIGNATURE\n  n/0\nRULE\n  IF n = undef THEN n := 0 ENDIF\n");
  EXPECT_EQ(t.status, RunStatus::kFixpoint);
  ASSERT_EQ(t.steps.size(), 2u);
  EXPECT_TRUE(t.steps[1].collapsed.updates.empty());
  EXPECT_EQ(t.final_state.Get(Loc("n")), Value::NatV(0));
}

TEST(EngineTest, StepCapStopsTheRun) {
  Trace t = RunText("SIGNATURE\n  n/0\nINIT\n  n := 0\nRULE\n  n := n + 1\n", 5);
  EXPECT_EQ(t.status, RunStatus::kMaxSteps);
  EXPECT_EQ(t.steps.size(), 5u);
  EXPECT_EQ(t.final_state.Get(Loc("n")), Value::NatV(5));
}

TEST(EngineTest, ClashHaltsWithTheStateUnchanged) {
  Trace t = RunText("SIGNATURE\n  n/0\nRULE\n  PAR\n n := 1\n n := 2\n ENDPAR\n");
  EXPECT_EQ(t.status, RunStatus::kFixpoint);
  ASSERT_EQ(t.steps.size(), 1u);
  EXPECT_TRUE(t.steps[0].collapsed.clash.has_value());
  EXPECT_TRUE(t.final_state.Get(Loc("n")).is_undef());
}

TEST(EngineTest, MalformedSelfIsAnError) {
  Trace t = RunText("SIGNATURE\n  n/0\nRULE\n  NODE[1] := rule<bogus>\n");
  EXPECT_EQ(t.status, RunStatus::kError);
  EXPECT_FALSE(t.error.empty());
}

TEST(EngineTest, SelfModificationChangesTheNextStep) {
  Trace t = RunText(
      "SIGNATURE\n  n/0\nINIT\n  n := 0\nRULE\n"
      "  PAR\n    n := n + 1\n"
      "    NODE[1] := rule<update<func(DROP(n)), term(tuple()), "
      "term(tuple(7))>>\n  ENDPAR\n",
      3);
  EXPECT_EQ(t.status, RunStatus::kMaxSteps);
  EXPECT_EQ(t.final_state.Get(Loc("n")), Value::NatV(7));
  EXPECT_NE(t.steps[0].rule_text, t.steps[1].rule_text);
}

TEST(EngineTest, NewFunctionsGrowTheSignature) {
  Trace t = RunText(
      "SIGNATURE\n  mode/0\nRULE\n  IF mode = undef THEN\n"
      "    LET g = newfunc() IN PAR\n"
      "      NODE[0] <=[right_extend] func<name(g), arity(1)>\n"
      "      mode := done\n    ENDPAR\n  ENDIF\n");
  ASSERT_EQ(t.status, RunStatus::kFixpoint);
  ASSERT_EQ(t.steps[0].signature_added.size(), 1u);
  EXPECT_EQ(t.steps[0].signature_added[0].arity, 1u);
  Signature final_sig = WithDecodedSignature(t.final_state).signature();
  EXPECT_TRUE(final_sig.Includes(t.steps[0].state.signature()));
  EXPECT_TRUE(final_sig.Contains(t.steps[0].signature_added[0].name));
  std::string why;
  EXPECT_TRUE(CheckTrace(t, &why)) << why;
}

TEST(EngineTest, ShrinkingTheSignatureIsAnError) {
  Trace t = RunText("SIGNATURE\n  n/0, m/0\nRULE\n  NODE[0] := signature<>\n");
  EXPECT_EQ(t.status, RunStatus::kError);
}

TEST(EngineTest, UndeclaredSymbolInAStoredRuleIsAnError) {
  Trace t = RunText(
      "SIGNATURE\n  n/0\nRULE\n"
      "  NODE[1] := rule<update<func(DROP(zz)), term(tuple()), "
      "term(tuple(1))>>\n",
      3);
  ASSERT_EQ(t.status, RunStatus::kError);
  EXPECT_EQ(t.steps.size(), 1u);
}

TEST(EngineTest, TraceJsonIsStable) {
  Trace a = RunSource(ReadProgram("parity.rsasm"));
  Trace b = RunSource(ReadProgram("parity.rsasm"));
  Json ja = TraceToJson(a);
  EXPECT_EQ(ja.dump(), TraceToJson(b).dump());
  EXPECT_EQ(ja["status"], "fixpoint");
  EXPECT_EQ(ja["steps"].size(), a.steps.size());
  EXPECT_EQ(ja["steps"][0]["self_digest"].get<std::string>().size(), 64u);
}

TEST(EngineTest, DefaultMaxStepsReadsTheEnvironment) {
  ::setenv("RSASM_MAX_STEPS", "17", 1);
  EXPECT_EQ(DefaultMaxSteps(), 17u);
  ::unsetenv("RSASM_MAX_STEPS");
  EXPECT_EQ(DefaultMaxSteps(), kDefaultMaxSteps);
}

TEST(CoincidenceTest, SelfAloneIsNotEnough) {
  frontend::Program p = Declare(
      "DOMAINS\n  D = {a, b}\nSIGNATURE\n  n/0, m/0\n");
  p.rule = frontend::ParseRule("m := n", InitialState(p).signature(),
                               p.background);
  State s1 = InitialState(p);
  State s2 = s1;
  s2.Set(Loc("n"), Value::NatV(1));
  std::vector<TermPtr> w = {frontend::ParseTerm("self", s1.signature(),
                                                p.background)};
  EXPECT_FALSE(CheckStrongCoincidence(s1, s2, w));
  State s3 = s1;
  s3.Set(Loc("m"), Value::NatV(4));
  EXPECT_TRUE(CheckStrongCoincidence(s1, s3, w));
}

TEST(ProbeTest, SmallProbesFindNoViolations) {
  std::vector<State> fixtures = FixtureStates();
  ProbeReport be = ProbeBoundedExploration(41, 60, fixtures);
  EXPECT_TRUE(be.ok()) << (be.findings.empty() ? "" : be.findings[0]);
  EXPECT_EQ(be.checked, 60u);
  ProbeReport iso = ProbeIsomorphismClosure(42, 40, fixtures);
  EXPECT_TRUE(iso.ok());
  EXPECT_EQ(iso.checked, 40u);
  ProbeReport det = ProbeDeterminism(43, 20);
  EXPECT_TRUE(det.ok());
}

TEST(FixtureTest, ParityAndJoinSmoke) {
  std::string why;
  EXPECT_TRUE(CheckParityCase(0b101101, &why, 1000.0)) << why;
  EXPECT_TRUE(CheckJoinCase(BundledJoinCase(), &why)) << why;
  EXPECT_TRUE(CheckFixtureTrace("join.rsasm", &why)) << why;
}

TEST(FixtureTest, JoinOracleOnAKnownCase) {
  std::set<Row> expected = {{"d1", "d2", "d3"}, {"d2", "d2", "d3"},
                            {"d3", "d1", "d1"}};
  EXPECT_EQ(JoinOracle(BundledJoinCase()), expected);
  EXPECT_EQ(JoinLayout(BundledJoinCase()),
            (std::vector<std::string>{"at1", "at2", "at3"}));
}

TEST(FixtureTest, GeneratedJoinSourceMatchesTheBundledProgram) {
  frontend::Program a = frontend::Parse(JoinSource(BundledJoinCase()));
  frontend::Program b = frontend::Parse(ReadProgram("join.rsasm"));
  EXPECT_TRUE(frontend::Equal(a, b));
}

}  // namespace
}  // namespace rsasm::testing
