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

// Members of the extended base set.
//
// A Value is one of: the distinguished undef, a truth value, a natural
// number, a standard atom from the base set, a function-symbol name, a tree
// label, a reference to a node of the current self tree, a dropped term, a
// tree (or context), a hedge, a tuple, or a finite set. Values are immutable;
// trees, hedges and terms are shared by pointer and compared structurally.

#ifndef RSASM_VALUE_H_
#define RSASM_VALUE_H_

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace rsasm {

class Tree;
struct Term;
class Value;

// Child-index path from a tree root; the empty path denotes the root.
using Path = std::vector<std::uint32_t>;

struct Undef {
  auto operator<=>(const Undef&) const = default;
};
struct Nat {
  std::uint64_t n = 0;
  auto operator<=>(const Nat&) const = default;
};
struct Atom {
  std::string name;
  auto operator<=>(const Atom&) const = default;
};
struct SymbolName {
  std::string name;
  auto operator<=>(const SymbolName&) const = default;
};
struct LabelValue {
  std::string name;
  auto operator<=>(const LabelValue&) const = default;
};
struct NodeRef {
  Path path;
  auto operator<=>(const NodeRef&) const = default;
};
struct TermRef {
  std::shared_ptr<const Term> term;
};
struct TreeRef {
  std::shared_ptr<const Tree> tree;
};
struct HedgeRef {
  std::shared_ptr<const std::vector<Tree>> trees;
};
struct Tuple {
  std::vector<Value> items;
};
// Sorted, duplicate-free.
struct SetValue {
  std::vector<Value> items;
};

class Value {
 public:
  enum class Kind {
    kUndef,
    kBool,
    kNat,
    kAtom,
    kSymbol,
    kLabel,
    kNode,
    kTerm,
    kTree,
    kHedge,
    kTuple,
    kSet,
  };
  using Rep = std::variant<Undef, bool, Nat, Atom, SymbolName, LabelValue,
                           NodeRef, TermRef, TreeRef, HedgeRef, Tuple,
                           SetValue>;

  Value() = default;

  static Value Bool(bool b) { return Value(Rep(b)); }
  static Value True() { return Bool(true); }
  static Value False() { return Bool(false); }
  static Value NatV(std::uint64_t n) { return Value(Rep(Nat{n})); }
  static Value AtomV(std::string name) {
    return Value(Rep(Atom{std::move(name)}));
  }
  static Value Symbol(std::string name) {
    return Value(Rep(SymbolName{std::move(name)}));
  }
  static Value Label(std::string name) {
    return Value(Rep(LabelValue{std::move(name)}));
  }
  static Value Node(Path path) { return Value(Rep(NodeRef{std::move(path)})); }
  static Value OfTerm(std::shared_ptr<const Term> term);
  static Value OfTree(Tree tree);
  static Value OfTree(std::shared_ptr<const Tree> tree);
  static Value OfHedge(std::vector<Tree> trees);
  static Value OfTuple(std::vector<Value> items) {
    return Value(Rep(Tuple{std::move(items)}));
  }
  // Sorts and removes duplicates.
  static Value OfSet(std::vector<Value> items);

  Kind kind() const { return static_cast<Kind>(rep_.index()); }
  bool is_undef() const { return kind() == Kind::kUndef; }
  bool is_bool() const { return kind() == Kind::kBool; }
  bool is_true() const { return is_bool() && std::get<bool>(rep_); }
  bool is_false() const { return is_bool() && !std::get<bool>(rep_); }
  // Values that both drop and raise leave untouched.
  bool is_scalar() const {
    Kind k = kind();
    return k == Kind::kUndef || k == Kind::kBool || k == Kind::kNat ||
           k == Kind::kAtom;
  }

  bool as_bool() const { return std::get<bool>(rep_); }
  std::uint64_t as_nat() const { return std::get<Nat>(rep_).n; }
  const std::string& as_atom() const { return std::get<Atom>(rep_).name; }
  const std::string& as_symbol() const {
    return std::get<SymbolName>(rep_).name;
  }
  const std::string& as_label() const {
    return std::get<LabelValue>(rep_).name;
  }
  const Path& as_node() const { return std::get<NodeRef>(rep_).path; }
  const std::shared_ptr<const Term>& as_term() const {
    return std::get<TermRef>(rep_).term;
  }
  const Tree& as_tree() const { return *std::get<TreeRef>(rep_).tree; }
  const std::shared_ptr<const Tree>& tree_ptr() const {
    return std::get<TreeRef>(rep_).tree;
  }
  const std::vector<Tree>& as_hedge() const {
    return *std::get<HedgeRef>(rep_).trees;
  }
  const std::vector<Value>& as_tuple() const {
    return std::get<Tuple>(rep_).items;
  }
  const std::vector<Value>& as_set() const {
    return std::get<SetValue>(rep_).items;
  }

  const Rep& rep() const { return rep_; }

  friend std::strong_ordering operator<=>(const Value& a, const Value& b);
  friend bool operator==(const Value& a, const Value& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  explicit Value(Rep rep) : rep_(std::move(rep)) {}

  Rep rep_;
};

const char* KindName(Value::Kind kind);

// Short human-readable rendering; not a serialization format.
std::string ToString(const Value& v);

// Views a tree or hedge value as a hedge; a tree is a one-element hedge.
// Throws TreeError for any other kind.
std::vector<Tree> AsHedge(const Value& v);

}  // namespace rsasm

#endif  // RSASM_VALUE_H_
