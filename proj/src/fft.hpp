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

#include <vector>

#include "state.hpp"

namespace emuq {

enum class FftDirection {
    Forward, // y_k = sum_j x_j e^{-2*pi*i*j*k/N}, unscaled
    Inverse, // y_k = (1/N) sum_j x_j e^{+2*pi*i*j*k/N}
};

/// Iterative radix-2 decimation-in-time FFT with bit-reversal reordering.
/// Length must be a power of two (NotPowerOfTwo otherwise).
void fft_inplace(std::vector<complexd>& data, FftDirection direction);

std::vector<complexd> fft_kernel(std::vector<complexd> data, FftDirection direction);

inline bool is_power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

} // namespace emuq
