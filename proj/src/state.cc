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

#include "rsasm/state.h"

#include <algorithm>
#include <sstream>

#include "rsasm/error.h"
#include "rsasm/tree.h"
#include "rsasm/treealg.h"

namespace rsasm {

Signature::Signature() : symbols_{FunctionSymbol{kSelf, 0}} {}

Signature::Signature(std::vector<FunctionSymbol> symbols) {
  for (auto& s : symbols) Add(std::move(s));
  auto self = ArityOf(kSelf);
  if (!self) throw SignatureError("signature lacks self");
  if (*self != 0) throw SignatureError("self must be nullary");
}

void Signature::Add(FunctionSymbol sym) {
  if (sym.name.empty()) throw SignatureError("empty function symbol name");
  if (Contains(sym.name)) {
    throw SignatureError("duplicate function symbol " + sym.name);
  }
  symbols_.push_back(std::move(sym));
}

std::optional<std::uint32_t> Signature::ArityOf(const std::string& name) const {
  for (const auto& s : symbols_) {
    if (s.name == name) return s.arity;
  }
  return std::nullopt;
}

bool Signature::Includes(const Signature& other) const {
  return std::all_of(other.symbols_.begin(), other.symbols_.end(),
                     [&](const FunctionSymbol& s) {
                       return ArityOf(s.name) == s.arity;
                     });
}

std::strong_ordering operator<=>(const Location& a, const Location& b) {
  if (auto c = a.symbol <=> b.symbol; c != 0) return c;
  std::size_t n = std::min(a.args.size(), b.args.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.args[i] <=> b.args[i]; c != 0) return c;
  }
  if (auto c = a.args.size() <=> b.args.size(); c != 0) return c;
  return a.sub <=> b.sub;
}

std::strong_ordering operator<=>(const Update& a, const Update& b) {
  if (auto c = a.location <=> b.location; c != 0) return c;
  return a.value <=> b.value;
}

Value State::Get(const Location& loc) const {
  auto it = interp_.find(loc.Root());
  if (it == interp_.end()) return Value();
  if (!loc.is_sublocation()) return it->second;
  if (it->second.kind() != Value::Kind::kTree) return Value();
  const Tree& t = it->second.as_tree();
  auto o = t.Find(loc.sub);
  if (!o) return Value();
  return Value::OfTree(Subtree(t, *o));
}

void State::Set(const Location& loc, Value v) {
  if (loc.is_sublocation()) {
    throw StateError("cannot set sublocation " + ToString(loc) + " directly");
  }
  if (v.is_undef()) {
    interp_.erase(loc);
  } else {
    interp_[loc] = std::move(v);
  }
}

std::string ToString(const Location& loc) {
  std::ostringstream out;
  out << loc.symbol;
  if (!loc.args.empty()) {
    out << "(";
    for (std::size_t i = 0; i < loc.args.size(); ++i) {
      if (i > 0) out << ", ";
      out << ToString(loc.args[i]);
    }
    out << ")";
  }
  if (loc.is_sublocation()) {
    out << "@[";
    for (std::size_t i = 0; i < loc.sub.size(); ++i) {
      if (i > 0) out << ".";
      out << loc.sub[i];
    }
    out << "]";
  }
  return out.str();
}

}  // namespace rsasm
