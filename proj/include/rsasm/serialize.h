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

// Canonical JSON forms of values, terms, trees and states. Object keys are
// sorted, so equal inputs serialize to identical bytes.

#ifndef RSASM_SERIALIZE_H_
#define RSASM_SERIALIZE_H_

#include <string>

#include "json.hpp"
#include "rsasm/rules.h"
#include "rsasm/state.h"
#include "rsasm/term.h"
#include "rsasm/tree.h"
#include "rsasm/value.h"

namespace rsasm {

using Json = nlohmann::json;

// Values: undef is null, booleans and naturals are JSON scalars, trees are
// {label, value?, children}, everything else is a one-key tagged object.
Json ToJson(const Value& v);
Json ToJson(const Tree& t);
Json ToJson(const Term& t);
Json ToJson(const Location& loc);
Json ToJson(const Update& u);
Json ToJson(const SharedUpdate& u);
Json ToJson(const MultisetEntry& e);
Json ToJson(const Signature& sig);
// Signature and the explicit interp entries in location order.
Json ToJson(const State& s);

// Inverses of the above. Throw std::invalid_argument on malformed input.
Value ValueFromJson(const Json& j);
Tree TreeFromJson(const Json& j);
TermPtr TermFromJson(const Json& j);
Location LocationFromJson(const Json& j);
Signature SignatureFromJson(const Json& j);
// Restores signature and interp on top of `base` (base set and domains).
State StateFromJson(const Json& j, const State& base);

std::string Canonical(const Json& j);
std::string Sha256Hex(const std::string& bytes);
// Hex SHA-256 of the canonical JSON of a self tree.
std::string Digest(const Tree& t);

}  // namespace rsasm

#endif  // RSASM_SERIALIZE_H_
