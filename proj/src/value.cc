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

#include "rsasm/value.h"

#include <algorithm>
#include <sstream>

#include "rsasm/error.h"
#include "rsasm/printer.h"
#include "rsasm/term.h"
#include "rsasm/tree.h"

namespace rsasm {

Value Value::OfTerm(std::shared_ptr<const Term> term) {
  return Value(Rep(TermRef{std::move(term)}));
}

Value Value::OfTree(Tree tree) {
  return Value(Rep(TreeRef{std::make_shared<const Tree>(std::move(tree))}));
}

Value Value::OfTree(std::shared_ptr<const Tree> tree) {
  return Value(Rep(TreeRef{std::move(tree)}));
}

Value Value::OfHedge(std::vector<Tree> trees) {
  return Value(Rep(
      HedgeRef{std::make_shared<const std::vector<Tree>>(std::move(trees))}));
}

Value Value::OfSet(std::vector<Value> items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  return Value(Rep(SetValue{std::move(items)}));
}

namespace {

template <typename T>
std::strong_ordering CompareSeq(const std::vector<T>& a,
                                const std::vector<T>& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  }
  return a.size() <=> b.size();
}

}  // namespace

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (auto c = a.rep_.index() <=> b.rep_.index(); c != 0) return c;
  switch (a.kind()) {
    case Value::Kind::kUndef:
      return std::strong_ordering::equal;
    case Value::Kind::kBool:
      return a.as_bool() <=> b.as_bool();
    case Value::Kind::kNat:
      return a.as_nat() <=> b.as_nat();
    case Value::Kind::kAtom:
      return a.as_atom() <=> b.as_atom();
    case Value::Kind::kSymbol:
      return a.as_symbol() <=> b.as_symbol();
    case Value::Kind::kLabel:
      return a.as_label() <=> b.as_label();
    case Value::Kind::kNode:
      return a.as_node() <=> b.as_node();
    case Value::Kind::kTerm:
      if (a.as_term() == b.as_term()) return std::strong_ordering::equal;
      return Compare(*a.as_term(), *b.as_term());
    case Value::Kind::kTree:
      if (a.tree_ptr() == b.tree_ptr()) return std::strong_ordering::equal;
      return a.as_tree() <=> b.as_tree();
    case Value::Kind::kHedge:
      return CompareSeq(a.as_hedge(), b.as_hedge());
    case Value::Kind::kTuple:
      return CompareSeq(a.as_tuple(), b.as_tuple());
    case Value::Kind::kSet:
      return CompareSeq(a.as_set(), b.as_set());
  }
  return std::strong_ordering::equal;
}

const char* KindName(Value::Kind kind) {
  switch (kind) {
    case Value::Kind::kUndef:
      return "undef";
    case Value::Kind::kBool:
      return "bool";
    case Value::Kind::kNat:
      return "nat";
    case Value::Kind::kAtom:
      return "atom";
    case Value::Kind::kSymbol:
      return "symbol";
    case Value::Kind::kLabel:
      return "label";
    case Value::Kind::kNode:
      return "node";
    case Value::Kind::kTerm:
      return "term";
    case Value::Kind::kTree:
      return "tree";
    case Value::Kind::kHedge:
      return "hedge";
    case Value::Kind::kTuple:
      return "tuple";
    case Value::Kind::kSet:
      return "set";
  }
  return "?";
}

std::string ToString(const Value& v) {
  std::ostringstream out;
  auto join = [&](const std::vector<Value>& items) {
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i > 0) out << ", ";
      out << ToString(items[i]);
    }
  };
  switch (v.kind()) {
    case Value::Kind::kUndef:
      out << "undef";
      break;
    case Value::Kind::kBool:
      out << (v.as_bool() ? "true" : "false");
      break;
    case Value::Kind::kNat:
      out << v.as_nat();
      break;
    case Value::Kind::kAtom:
      out << v.as_atom();
      break;
    case Value::Kind::kSymbol:
      out << "DROP(" << v.as_symbol() << ")";
      break;
    case Value::Kind::kLabel:
      out << "LABEL(" << v.as_label() << ")";
      break;
    case Value::Kind::kNode: {
      out << "NODE[";
      const Path& p = v.as_node();
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (i > 0) out << ".";
        out << p[i];
      }
      out << "]";
      break;
    }
    case Value::Kind::kTerm:
      out << "DROP(" << frontend::PrintTerm(*v.as_term()) << ")";
      break;
    case Value::Kind::kTree:
      out << ToString(v.as_tree());
      break;
    case Value::Kind::kHedge: {
      out << "HEDGE(";
      const auto& h = v.as_hedge();
      for (std::size_t i = 0; i < h.size(); ++i) {
        if (i > 0) out << ", ";
        out << ToString(h[i]);
      }
      out << ")";
      break;
    }
    case Value::Kind::kTuple:
      out << "TUPLE(";
      join(v.as_tuple());
      out << ")";
      break;
    case Value::Kind::kSet:
      out << "{";
      join(v.as_set());
      out << "}";
      break;
  }
  return out.str();
}

std::vector<Tree> AsHedge(const Value& v) {
  if (v.kind() == Value::Kind::kTree) return {v.as_tree()};
  if (v.kind() == Value::Kind::kHedge) return v.as_hedge();
  throw TreeError(std::string("expected a tree or hedge, got ") +
                  KindName(v.kind()));
}

}  // namespace rsasm
