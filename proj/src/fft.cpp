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

#include "fft.hpp"

#include <cmath>
#include <numbers>

namespace emuq {

namespace {

// Twiddles are advanced multiplicatively and re-anchored with sin/cos every
// kRefresh steps, bounding the accumulated rounding error without a length-N/2
// twiddle table (which would double the footprint of large transforms).
constexpr std::size_t kRefresh = 64;

void bit_reverse_permute(std::vector<complexd>& data) {
    const std::size_t n = data.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1)
            j ^= bit;
        j ^= bit;
        if (i < j)
            std::swap(data[i], data[j]);
    }
}

} // namespace

void fft_inplace(std::vector<complexd>& data, FftDirection direction) {
    const std::size_t n = data.size();
    if (!is_power_of_two(n))
        raise(Errc::NotPowerOfTwo, "transform length " + std::to_string(n) +
                                       " is not a power of two");
    if (n == 1) {
        return; // both directions are the identity (inverse scale is 1/1)
    }

    bit_reverse_permute(data);

    const double sign = direction == FftDirection::Forward ? -1.0 : 1.0;
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t half = len >> 1;
        const double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
        const complexd step = std::polar(1.0, ang);
        for (std::size_t block = 0; block < n; block += len) {
            complexd w{1.0, 0.0};
            for (std::size_t k = 0; k < half; ++k) {
                if (k % kRefresh == 0)
                    w = std::polar(1.0, ang * static_cast<double>(k));
                complexd lo = data[block + k];
                complexd hi = data[block + k + half] * w;
                data[block + k] = lo + hi;
                data[block + k + half] = lo - hi;
                w *= step;
            }
        }
    }

    if (direction == FftDirection::Inverse) {
        const double scale = 1.0 / static_cast<double>(n);
        for (complexd& a : data)
            a *= scale;
    }
}

std::vector<complexd> fft_kernel(std::vector<complexd> data, FftDirection direction) {
    fft_inplace(data, direction);
    return data;
}

} // namespace emuq
