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


// Runs the eight acceptance criteria and prints one PASS/FAIL line each.
// Exits nonzero when any criterion fails.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "fixtures.h"
#include "rsasm/engine.h"
#include "rsasm/probe.h"
#include "rsasm/random_program.h"

namespace {

using namespace rsasm;
using namespace rsasm::testing;

struct Result {
  bool pass = true;
  std::string detail;
};

// Runs `trial` n times and keeps the first failure.
template <typename F>
Result Repeat(std::uint64_t seed, int n, const char* what, F trial) {
  gen::Rng rng(seed);
  int failures = 0;
  std::string first;
  for (int i = 0; i < n; ++i) {
    std::string why;
    if (!trial(rng, &why)) {
      if (failures++ == 0) first = "trial " + std::to_string(i) + ": " + why;
    }
  }
  Result r;
  r.pass = failures == 0;
  r.detail = std::to_string(n) + " " + what + ", " +
             std::to_string(failures) + " failures";
  if (!first.empty()) r.detail += "; first: " + first;
  return r;
}

Result Parity() {
  int failures = 0;
  std::string first;
  for (std::uint32_t mask = 0; mask < 64; ++mask) {
    std::string why;
    if (!CheckParityCase(mask, &why) && failures++ == 0) first = why;
  }
  Result r{failures == 0,
           "64 subsets, " + std::to_string(failures) + " failures"};
  if (!first.empty()) r.detail += "; first: " + first;
  return r;
}

Result JoinCases() {
  gen::Rng rng(2026);
  std::vector<JoinCase> cases = {BundledJoinCase()};
  while (cases.size() < 200) cases.push_back(RandomJoinCase(rng));
  int failures = 0;
  std::string first;
  std::uint64_t rows = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    std::string why;
    rows += JoinOracle(cases[i]).size();
    if (!CheckJoinCase(cases[i], &why) && failures++ == 0) {
      first = "case " + std::to_string(i) + ": " + why;
    }
  }
  Result r{failures == 0, std::to_string(cases.size()) + " cases (" +
                              std::to_string(rows) + " oracle rows), " +
                              std::to_string(failures) + " failures"};
  if (!first.empty()) r.detail += "; first: " + first;
  return r;
}

Result FromReport(const ProbeReport& p, std::uint64_t need) {
  Result r;
  r.pass = p.ok() && p.checked >= need;
  r.detail = std::to_string(p.checked) + " checked of " +
             std::to_string(p.trials) + " drawn, " +
             std::to_string(p.violations) + " violations";
  if (!p.findings.empty()) r.detail += "; first: " + p.findings.front();
  return r;
}

Result Determinism(const std::vector<State>& fixtures) {
  Result r;
  std::vector<std::string> failures;
  for (const char* name : {"parity.rsasm", "join.rsasm"}) {
    std::string why;
    if (!CheckFixtureTrace(name, &why)) failures.push_back(why);
  }
  ProbeReport det = ProbeDeterminism(8, 200);
  for (const auto& f : det.findings) failures.push_back(f);
  ProbeReport a = ProbeIsomorphismClosure(9, 50, fixtures);
  ProbeReport b = ProbeIsomorphismClosure(9, 50, fixtures);
  if (a.checked != b.checked || a.violations != b.violations ||
      a.findings != b.findings) {
    failures.push_back("probe re-run with the same seed differs");
  }
  r.pass = failures.empty() && det.ok();
  r.detail = "2 fixtures, " + std::to_string(det.checked) +
             " probe machines, " + std::to_string(failures.size()) +
             " failures";
  if (!failures.empty()) r.detail += "; first: " + failures.front();
  return r;
}

}  // namespace

int main() {
  auto start = std::chrono::steady_clock::now();
  std::vector<State> fixtures = FixtureStates();
  struct Criterion {
    const char* name;
    Result (*run)(const std::vector<State>&);
  };
  const Criterion criteria[] = {
      {"parity fixture", [](const std::vector<State>&) { return Parity(); }},
      {"join fixture",
       [](const std::vector<State>&) { return JoinCases(); }},
      {"tree algebra laws",
       [](const std::vector<State>&) {
         return Repeat(3, 1000, "trials", TreeLawTrial);
       }},
      {"tree diff and update rule",
       [](const std::vector<State>&) {
         return Repeat(4, 200, "pairs", TreeDiffTrial);
       }},
      {"reflection round trips",
       [](const std::vector<State>&) {
         return Repeat(5, 500, "rules", ReflectionTrial);
       }},
      {"bounded exploration witness",
       [](const std::vector<State>& f) {
         return FromReport(ProbeBoundedExploration(6, 500, f), 500);
       }},
      {"isomorphism closure",
       [](const std::vector<State>& f) {
         return FromReport(ProbeIsomorphismClosure(7, 200, f), 200);
       }},
      {"signature monotonicity and determinism", Determinism},
  };
  int failed = 0;
  int index = 1;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Result r;
    try {
      r = c.run(fixtures);
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    if (!r.pass) ++failed;
    std::cout << (r.pass ? "PASS" : "FAIL") << " " << index++ << " "
              << c.name << ": " << r.detail << " (" << secs << " s)"
              << std::endl;
  }
  double total = std::chrono::duration<double>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  std::cout << "total " << total << " s" << std::endl;
  return failed == 0 ? 0 : 1;
}
