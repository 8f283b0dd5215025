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


// Command-line driver: run, check, probe and diff-self.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rsasm/engine.h"
#include "rsasm/error.h"
#include "rsasm/parser.h"
#include "rsasm/printer.h"
#include "rsasm/probe.h"
#include "rsasm/serialize.h"
#include "rsasm/tree_diff.h"

namespace {

using rsasm::Json;

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

rsasm::Machine Load(const std::string& path) {
  return rsasm::frontend::BuildMachine(
      rsasm::frontend::Parse(ReadFile(path)));
}

void PrintInterp(const rsasm::State& s, std::ostream& out) {
  for (const auto& [loc, v] : s.interp()) {
    if (loc.symbol == rsasm::kSelf) continue;
    out << "  " << rsasm::ToString(loc) << " = " << rsasm::ToString(v)
        << "\n";
  }
}

bool HasClash(const rsasm::Trace& trace) {
  return !trace.steps.empty() && trace.steps.back().collapsed.clash;
}

int Run(const std::string& file, std::optional<std::uint64_t> max_steps,
        const std::string& trace_path, std::optional<std::uint64_t> dump,
        const std::string& format, bool strict) {
  rsasm::Machine m = Load(file);
  if (max_steps) m.max_steps = *max_steps;
  rsasm::Trace trace = rsasm::Run(m);
  Json j = rsasm::TraceToJson(trace);
  if (!trace_path.empty()) {
    std::ofstream out(trace_path);
    out << j.dump(2) << "\n";
  }
  if (dump) {
    if (*dump > trace.steps.size()) {
      std::cerr << "error: step " << *dump << " out of range\n";
      return 2;
    }
    const rsasm::State& s = *dump == trace.steps.size()
                                ? trace.final_state
                                : trace.steps[*dump].state;
    if (format == "json") {
      std::cout << rsasm::ToJson(s.GetSelf()).dump(2) << "\n";
    } else {
      std::cout << rsasm::ToString(s.GetSelf()) << "\n";
    }
  } else if (format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& st : trace.steps) {
      std::cout << "step " << st.index << ": " << st.collapsed.updates.size()
                << " updates";
      if (st.collapsed.clash) std::cout << " (clash)";
      if (!st.signature_added.empty()) {
        std::cout << ", signature +";
        for (const auto& f : st.signature_added) {
          std::cout << " " << f.name << "/" << f.arity;
        }
      }
      std::cout << "\n";
    }
    std::cout << "status: " << rsasm::ToString(trace.status) << "\n";
    if (!trace.error.empty()) std::cout << "error: " << trace.error << "\n";
    std::cout << "final state:\n";
    PrintInterp(trace.final_state, std::cout);
  }
  if (trace.status == rsasm::RunStatus::kError) return 1;
  if (strict && HasClash(trace)) return 1;
  return 0;
}

int Check(const std::string& file) {
  rsasm::frontend::Program p = rsasm::frontend::Parse(ReadFile(file));
  rsasm::Machine m = rsasm::frontend::BuildMachine(p);
  rsasm::ValidateRule(*p.rule, m.initial.signature());
  std::cout << "ok: " << m.initial.signature().symbols().size()
            << " symbols\n";
  return 0;
}

int Probe(std::uint64_t trials, std::uint64_t seed,
          const std::vector<std::string>& fixtures) {
  std::vector<rsasm::State> states;
  for (const auto& f : fixtures) {
    rsasm::Trace t = rsasm::Run(Load(f));
    for (const auto& s : t.steps) states.push_back(s.state);
  }
  auto report = [](const char* name, const rsasm::ProbeReport& r) {
    std::cout << name << ": trials " << r.trials << ", checked " << r.checked
              << ", violations " << r.violations;
    if (r.unclosed_violations) {
      std::cout << ", unclosed " << r.unclosed_violations;
    }
    std::cout << "\n";
    for (const auto& f : r.findings) std::cout << "  " << f << "\n";
    return r.ok();
  };
  bool ok = true;
  ok &= report("bounded-exploration",
               rsasm::ProbeBoundedExploration(seed, trials, states));
  ok &= report("isomorphism",
               rsasm::ProbeIsomorphismClosure(seed + 1, trials, states));
  ok &= report("determinism", rsasm::ProbeDeterminism(seed + 2, trials));
  return ok ? 0 : 1;
}

rsasm::Tree SelfOf(const Json& state) {
  for (const auto& e : state.at("interp")) {
    if (rsasm::LocationFromJson(e.at("location")).symbol == rsasm::kSelf) {
      return rsasm::ValueFromJson(e.at("value")).as_tree();
    }
  }
  throw std::runtime_error("state has no self");
}

rsasm::Tree SelfAt(const Json& trace, std::size_t i) {
  const Json& steps = trace.at("steps");
  if (i == steps.size()) return SelfOf(trace.at("final"));
  if (i > steps.size()) {
    throw std::runtime_error("step " + std::to_string(i) + " out of range");
  }
  return SelfOf(steps.at(i).at("state"));
}

int DiffSelf(const std::string& path, std::size_t i, std::size_t j,
             const std::string& format) {
  Json trace = Json::parse(ReadFile(path));
  rsasm::Tree a = SelfAt(trace, i);
  rsasm::Tree b = SelfAt(trace, j);
  rsasm::AlgebraPtr theta = rsasm::TreeDiff(a, b);
  if (format == "json") {
    Json out{{"theta", rsasm::ToString(*theta)},
             {"rule", rsasm::frontend::PrintRule(*rsasm::TreeUpdateRule(a, b))}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << rsasm::ToString(*theta) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reflective sequential ASM interpreter"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));

  std::string file;
  std::optional<std::uint64_t> max_steps;
  std::optional<std::uint64_t> dump;
  std::string trace_path;
  bool strict = false;
  CLI::App* run = app.add_subcommand("run", "Run a program");
  run->add_option("file", file, "Program file")->required();
  run->add_option("--max-steps", max_steps, "Step cap");
  run->add_option("--trace", trace_path, "Write the trace as JSON");
  run->add_option("--dump-self", dump, "Print self before the given step");
  run->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  run->add_flag("--strict", strict, "Fail on a clash");

  CLI::App* check = app.add_subcommand("check", "Parse and validate");
  check->add_option("file", file, "Program file")->required();

  std::uint64_t trials = 200;
  std::uint64_t seed = 1;
  std::vector<std::string> fixtures;
  CLI::App* probe = app.add_subcommand("probe", "Run the randomized property probes");
  probe->add_option("--trials", trials, "Trials per probe");
  probe->add_option("--seed", seed, "Random seed");
  probe->add_option("--fixture", fixtures, "Programs whose states seed probes");

  std::string trace_in;
  std::size_t i = 0;
  std::size_t j = 0;
  CLI::App* diff = app.add_subcommand("diff-self", "Diff self between steps");
  diff->add_option("trace", trace_in, "Trace JSON")->required();
  diff->add_option("i", i, "First step")->required();
  diff->add_option("j", j, "Second step")->required();
  diff->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return Run(file, max_steps, trace_path, dump, format, strict);
    if (*check) return Check(file);
    if (*probe) return Probe(trials, seed, fixtures);
    if (*diff) return DiffSelf(trace_in, i, j, format);
  } catch (const rsasm::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
