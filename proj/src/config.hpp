// Copyright 2026 The emuq developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <cstdlib>

namespace emuq {

/// Hard ceiling on dense amplitude counts. Defaults to 2^28 amplitudes
/// (4 GiB of complex doubles); override with the UNIQUE_MEM_CAP environment
/// variable (amplitude count). Operations whose dense output would exceed
/// the cap fail with CapacityExceeded instead of exhausting the allocator.
inline std::uint64_t dense_cap() {
    static const std::uint64_t cap = [] {
        if (const char* env = std::getenv("UNIQUE_MEM_CAP")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end != env && *end == '\0' && v > 0)
                return static_cast<std::uint64_t>(v);
        }
        return std::uint64_t{1} << 28;
    }();
    return cap;
}

} // namespace emuq
