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

#include "rsasm/reserve.h"

#include <charconv>

namespace rsasm {

ReserveAllocator::ReserveAllocator(const Signature& signature) {
  const std::string prefix = kReservePrefix;
  for (const auto& s : signature.symbols()) {
    taken_.insert(s.name);
    if (s.name.rfind(prefix, 0) != 0) continue;
    std::uint64_t k = 0;
    const char* first = s.name.data() + prefix.size();
    const char* last = s.name.data() + s.name.size();
    auto [ptr, ec] = std::from_chars(first, last, k);
    if (ec == std::errc() && ptr == last && k + 1 > next_) next_ = k + 1;
  }
}

std::string ReserveAllocator::Allocate() {
  for (;;) {
    std::string name = kReservePrefix + std::to_string(next_++);
    if (taken_.insert(name).second) return name;
  }
}

}  // namespace rsasm
