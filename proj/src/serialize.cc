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

#include "rsasm/serialize.h"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <map>
#include <stdexcept>

namespace rsasm {
namespace {

using K = Term::Kind;

const std::map<K, std::string>& KindNames() {
  static const auto* names = new std::map<K, std::string>{
      {K::kConst, "const"},   {K::kVar, "var"},       {K::kApp, "app"},
      {K::kApply, "apply"},   {K::kSym, "sym"},       {K::kOpApp, "opapp"},
      {K::kEq, "eq"},         {K::kAnd, "and"},       {K::kOr, "or"},
      {K::kNot, "not"},       {K::kIota, "iota"},     {K::kExists, "exists"},
      {K::kSetOf, "setof"},   {K::kDomain, "domain"}, {K::kDrop, "drop"},
      {K::kRaise, "raise"},   {K::kSubloc, "subloc"}, {K::kTreeLit, "tree"},
      {K::kHole, "hole"},
  };
  return *names;
}

[[noreturn]] void Malformed(const std::string& what) {
  throw std::invalid_argument("malformed JSON: " + what);
}

Json PathJson(const Path& p) {
  Json j = Json::array();
  for (auto i : p) j.push_back(i);
  return j;
}

Path PathFromJson(const Json& j) {
  if (!j.is_array()) Malformed("path");
  Path p;
  for (const auto& x : j) p.push_back(x.get<std::uint32_t>());
  return p;
}

Json TreeNodeJson(const Tree& t, NodeId o) {
  Json j;
  j["label"] = t.label(o);
  if (!t.value(o).is_undef()) j["value"] = ToJson(t.value(o));
  Json kids = Json::array();
  for (NodeId c : t.children(o)) kids.push_back(TreeNodeJson(t, c));
  j["children"] = std::move(kids);
  return j;
}

void TreeNodeFromJson(const Json& j, Tree::Builder& b,
                      std::optional<NodeId> parent) {
  if (!j.is_object() || !j.contains("label")) Malformed("tree node");
  Value v = j.contains("value") ? ValueFromJson(j["value"]) : Value();
  NodeId id = b.Open(j["label"].get<std::string>(), std::move(v), parent);
  if (j.contains("children")) {
    for (const auto& c : j["children"]) TreeNodeFromJson(c, b, id);
  }
}

Json ValuesJson(const std::vector<Value>& vs) {
  Json j = Json::array();
  for (const auto& v : vs) j.push_back(ToJson(v));
  return j;
}

std::vector<Value> ValuesFromJson(const Json& j) {
  if (!j.is_array()) Malformed("value list");
  std::vector<Value> out;
  for (const auto& x : j) out.push_back(ValueFromJson(x));
  return out;
}

}  // namespace

Json ToJson(const Value& v) {
  switch (v.kind()) {
    case Value::Kind::kUndef: return nullptr;
    case Value::Kind::kBool: return v.as_bool();
    case Value::Kind::kNat: return v.as_nat();
    case Value::Kind::kAtom: return {{"atom", v.as_atom()}};
    case Value::Kind::kSymbol: return {{"symbol", v.as_symbol()}};
    case Value::Kind::kLabel: return {{"labelname", v.as_label()}};
    case Value::Kind::kNode: return {{"node", PathJson(v.as_node())}};
    case Value::Kind::kTerm: return {{"term", ToJson(*v.as_term())}};
    case Value::Kind::kTree: return ToJson(v.as_tree());
    case Value::Kind::kHedge: {
      Json h = Json::array();
      for (const auto& t : v.as_hedge()) h.push_back(ToJson(t));
      return {{"hedge", std::move(h)}};
    }
    case Value::Kind::kTuple: return {{"tuple", ValuesJson(v.as_tuple())}};
    case Value::Kind::kSet: return {{"set", ValuesJson(v.as_set())}};
  }
  return nullptr;
}

Json ToJson(const Tree& t) { return TreeNodeJson(t, t.root()); }

Json ToJson(const Term& t) {
  Json j;
  j["kind"] = KindNames().at(t.kind);
  if (!t.name.empty()) j["name"] = t.name;
  if (!t.domain.empty()) j["domain"] = t.domain;
  if (t.kind == K::kConst) j["value"] = ToJson(t.value);
  if (t.kind == K::kSubloc) j["path"] = PathJson(t.path);
  if (t.leaf) j["leaf"] = ToJson(*t.leaf);
  if (!t.args.empty()) {
    Json a = Json::array();
    for (const auto& x : t.args) a.push_back(ToJson(*x));
    j["args"] = std::move(a);
  }
  return j;
}

Json ToJson(const Location& loc) {
  Json j{{"symbol", loc.symbol}, {"args", ValuesJson(loc.args)}};
  if (loc.is_sublocation()) j["sub"] = PathJson(loc.sub);
  return j;
}

Json ToJson(const Update& u) {
  return {{"location", ToJson(u.location)}, {"value", ToJson(u.value)}};
}

Json ToJson(const SharedUpdate& u) {
  Json j{{"location", ToJson(u.location)},
         {"op", u.op},
         {"args", ValuesJson(u.args)}};
  if (u.splice) j["splice"] = PathJson(*u.splice);
  return j;
}

Json ToJson(const MultisetEntry& e) {
  return std::visit([](const auto& u) { return ToJson(u); }, e);
}

Json ToJson(const Signature& sig) {
  Json j = Json::array();
  for (const auto& f : sig.symbols()) {
    j.push_back({{"name", f.name}, {"arity", f.arity}});
  }
  return j;
}

Json ToJson(const State& s) {
  Json interp = Json::array();
  for (const auto& [loc, v] : s.interp()) {
    interp.push_back({{"location", ToJson(loc)}, {"value", ToJson(v)}});
  }
  return {{"signature", ToJson(s.signature())}, {"interp", std::move(interp)}};
}

Value ValueFromJson(const Json& j) {
  if (j.is_null()) return Value();
  if (j.is_boolean()) return Value::Bool(j.get<bool>());
  if (j.is_number_unsigned() || j.is_number_integer()) {
    return Value::NatV(j.get<std::uint64_t>());
  }
  if (!j.is_object()) Malformed("value");
  if (j.contains("label")) return Value::OfTree(TreeFromJson(j));
  if (j.size() != 1) Malformed("value object");
  const auto& [key, body] = *j.items().begin();
  if (key == "atom") return Value::AtomV(body.get<std::string>());
  if (key == "symbol") return Value::Symbol(body.get<std::string>());
  if (key == "labelname") return Value::Label(body.get<std::string>());
  if (key == "node") return Value::Node(PathFromJson(body));
  if (key == "term") return Value::OfTerm(TermFromJson(body));
  if (key == "hedge") {
    std::vector<Tree> h;
    for (const auto& t : body) h.push_back(TreeFromJson(t));
    return Value::OfHedge(std::move(h));
  }
  if (key == "tuple") return Value::OfTuple(ValuesFromJson(body));
  if (key == "set") return Value::OfSet(ValuesFromJson(body));
  Malformed("value tag " + key);
}

Tree TreeFromJson(const Json& j) {
  Tree::Builder b;
  TreeNodeFromJson(j, b, std::nullopt);
  return std::move(b).Finish();
}

TermPtr TermFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("kind")) Malformed("term");
  auto kind_name = j["kind"].get<std::string>();
  Term t;
  bool found = false;
  for (const auto& [k, n] : KindNames()) {
    if (n == kind_name) {
      t.kind = k;
      found = true;
    }
  }
  if (!found) Malformed("term kind " + kind_name);
  if (j.contains("name")) t.name = j["name"].get<std::string>();
  if (j.contains("domain")) t.domain = j["domain"].get<std::string>();
  if (j.contains("value")) t.value = ValueFromJson(j["value"]);
  if (j.contains("path")) t.path = PathFromJson(j["path"]);
  if (j.contains("leaf")) t.leaf = TermFromJson(j["leaf"]);
  if (j.contains("args")) {
    for (const auto& a : j["args"]) t.args.push_back(TermFromJson(a));
  }
  return std::make_shared<const Term>(std::move(t));
}

Location LocationFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("symbol")) Malformed("location");
  Location loc;
  loc.symbol = j["symbol"].get<std::string>();
  if (j.contains("args")) loc.args = ValuesFromJson(j["args"]);
  if (j.contains("sub")) loc.sub = PathFromJson(j["sub"]);
  return loc;
}

Signature SignatureFromJson(const Json& j) {
  if (!j.is_array()) Malformed("signature");
  std::vector<FunctionSymbol> syms;
  for (const auto& f : j) {
    syms.push_back({f["name"].get<std::string>(), f["arity"].get<std::uint32_t>()});
  }
  return Signature(std::move(syms));
}

State StateFromJson(const Json& j, const State& base) {
  if (!j.is_object()) Malformed("state");
  State s(SignatureFromJson(j.at("signature")), base.base(), base.background());
  for (const auto& e : j.at("interp")) {
    s.Set(LocationFromJson(e.at("location")), ValueFromJson(e.at("value")));
  }
  return s;
}

std::string Canonical(const Json& j) { return j.dump(); }

std::string Sha256Hex(const std::string& bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(),
                 nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    hex += buf;
  }
  return hex;
}

std::string Digest(const Tree& t) { return Sha256Hex(Canonical(ToJson(t))); }

}  // namespace rsasm
