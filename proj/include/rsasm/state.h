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

// States as Tarski structures over a signature and an extended base set.

#ifndef RSASM_STATE_H_
#define RSASM_STATE_H_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rsasm/value.h"

namespace rsasm {

inline constexpr char kSelf[] = "self";

struct FunctionSymbol {
  std::string name;
  std::uint32_t arity = 0;

  auto operator<=>(const FunctionSymbol&) const = default;
};

// Ordered list of function symbols with unique names. The order is the order
// of the func entries in the self tree.
class Signature {
 public:
  // A signature holding only `self`.
  Signature();
  // Throws SignatureError on duplicate names or a missing/ill-typed `self`.
  explicit Signature(std::vector<FunctionSymbol> symbols);

  // Throws SignatureError if `sym.name` is already present.
  void Add(FunctionSymbol sym);

  std::optional<std::uint32_t> ArityOf(const std::string& name) const;
  bool Contains(const std::string& name) const {
    return ArityOf(name).has_value();
  }
  // True iff every symbol of `other` occurs here with the same arity.
  bool Includes(const Signature& other) const;

  const std::vector<FunctionSymbol>& symbols() const { return symbols_; }

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.symbols_ == b.symbols_;
  }

 private:
  std::vector<FunctionSymbol> symbols_;
};

// A function symbol with an argument tuple. `sub` addresses a node inside the
// tree stored at the location (a sublocation); it is empty for the location
// itself and only ever non-empty for `self`.
struct Location {
  std::string symbol;
  std::vector<Value> args;
  Path sub;

  static Location Self() { return Location{kSelf, {}, {}}; }
  bool is_sublocation() const { return !sub.empty(); }
  // The location without its sublocation path.
  Location Root() const { return Location{symbol, args, {}}; }

  friend std::strong_ordering operator<=>(const Location& a,
                                          const Location& b);
  friend bool operator==(const Location& a, const Location& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }
};

struct Update {
  Location location;
  Value value;

  friend std::strong_ordering operator<=>(const Update& a, const Update& b);
  friend bool operator==(const Update& a, const Update& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }
};

using UpdateSet = std::set<Update>;

// Background configuration outside the structure proper: declared finite
// domains (sorted element sets).
struct Background {
  std::map<std::string, std::vector<Value>> domains;

  friend bool operator==(const Background&, const Background&) = default;
};

// A state. Locations absent from the interpretation read undef; undef is
// never stored explicitly.
class State {
 public:
  State() = default;
  State(Signature signature, std::set<Value> base, Background background)
      : signature_(std::move(signature)),
        base_(std::move(base)),
        background_(std::move(background)) {}

  const Signature& signature() const { return signature_; }
  void set_signature(Signature s) { signature_ = std::move(s); }
  const std::set<Value>& base() const { return base_; }
  const Background& background() const { return background_; }
  const std::map<Location, Value>& interp() const { return interp_; }

  // val_S(loc); sublocations read the subtree at the addressed node, or undef
  // when the node does not exist.
  Value Get(const Location& loc) const;
  Value GetSelf() const { return Get(Location::Self()); }
  // Sets a root location; undef erases the entry.
  void Set(const Location& loc, Value v);

  friend bool operator==(const State&, const State&) = default;

 private:
  Signature signature_;
  std::set<Value> base_;
  Background background_;
  std::map<Location, Value> interp_;
};

std::string ToString(const Location& loc);

}  // namespace rsasm

#endif  // RSASM_STATE_H_
