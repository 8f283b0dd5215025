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

// Rule semantics: update multisets, sublocation normalization and collapse.

#ifndef RSASM_RULES_H_
#define RSASM_RULES_H_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rsasm/reserve.h"
#include "rsasm/rule.h"
#include "rsasm/state.h"
#include "rsasm/structures.h"
#include "rsasm/value.h"

namespace rsasm {

// (location, op, args). After normalization a shared update on a
// sublocation of self is addressed at self with `splice` holding the node
// path: the operator then acts on the subtree at that path.
struct SharedUpdate {
  Location location;
  std::string op;
  std::vector<Value> args;
  std::optional<Path> splice;

  friend std::strong_ordering operator<=>(const SharedUpdate& a,
                                          const SharedUpdate& b);
  friend bool operator==(const SharedUpdate& a, const SharedUpdate& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }
};

using MultisetEntry = std::variant<Update, SharedUpdate>;
// Order of entries is the order of production; equality of multisets is
// checked on the sorted form.
using UpdateMultiset = std::vector<MultisetEntry>;

struct ClashReport {
  Location location;
  std::string reason;
};

struct Collapsed {
  UpdateSet updates;
  std::optional<ClashReport> clash;

  bool ok() const { return !clash.has_value(); }
};

// Maximal group size for the exhaustive permutation check.
inline constexpr std::size_t kMaxPermutationGroup = 6;

// Δ̈_r(S) under `env`. Throws RuleError for a non-Boolean branch condition,
// an unknown operator or a target that denotes nothing, and SignatureError
// for arity mismatches.
UpdateMultiset ComputeUpdateMultiset(const Rule& rule, const State& state,
                                     const Env& env = {},
                                     ReserveAllocator* reserve = nullptr);

// Rewrites every entry addressed at a sublocation of self as a shared update
// on self with a splice path; plain sublocation updates use the internal
// assign operator.
UpdateMultiset NormalizeSublocations(const UpdateMultiset& m);

// Groups by location and folds shared updates over the current value.
Collapsed Collapse(const UpdateMultiset& m, const State& state);

struct Execution {
  UpdateMultiset multiset;
  Collapsed collapsed;
};

Execution Execute(const Rule& rule, const State& state,
                  ReserveAllocator* reserve = nullptr);

// Entries sorted, for multiset comparison.
UpdateMultiset Canonical(UpdateMultiset m);

std::string ToString(const MultisetEntry& e);

}  // namespace rsasm

#endif  // RSASM_RULES_H_
