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

#ifndef RSASM_RESERVE_H_
#define RSASM_RESERVE_H_

#include <cstdint>
#include <set>
#include <string>

#include "rsasm/state.h"

namespace rsasm {

inline constexpr char kReservePrefix[] = "f$";

// Hands out reserve function symbols `f$k`. The counter starts above the
// largest reserve index already present in the signature, so the names a step
// allocates are determined by the signature alone.
class ReserveAllocator {
 public:
  explicit ReserveAllocator(const Signature& signature);

  // A name not in the signature and not handed out before.
  std::string Allocate();

  std::uint64_t next() const { return next_; }

 private:
  std::set<std::string> taken_;
  std::uint64_t next_ = 0;
};

}  // namespace rsasm

#endif  // RSASM_RESERVE_H_
