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

#include "transforms.hpp"

#include <cmath>
#include <utility>

namespace emuq {

namespace {

DenseState transform(DenseState state, FftDirection direction) {
    if (!state.is_normalized())
        raise(Errc::NotNormalized, "transform input must be normalized (norm " +
                                       std::to_string(state.norm()) + ")");
    const std::size_t n = state.len();
    fft_inplace(state.amps, direction);

    // Rescale the kernel output to the unitary 1/sqrt(N) weighting, then
    // normalize as a guard against accumulated round-off. With exact
    // arithmetic the normalize is a no-op. In-place so a 2^28-amplitude
    // transform does not double its footprint.
    const double scale = direction == FftDirection::Inverse
                             ? std::sqrt(static_cast<double>(n))
                             : 1.0 / std::sqrt(static_cast<double>(n));
    double norm_sq = 0.0;
    for (complexd& a : state.amps) {
        a *= scale;
        norm_sq += std::norm(a);
    }
    if (!std::isfinite(norm_sq))
        raise(Errc::InvalidArgument, "transform produced non-finite amplitudes");
    if (norm_sq == 0.0)
        raise(Errc::ZeroVector, "transform of the all-zero state");
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (complexd& a : state.amps)
        a *= inv;
    return state;
}

} // namespace

DenseState qft(const DenseState& state) { return qft(DenseState(state)); }

DenseState qft(DenseState&& state) { return transform(std::move(state), FftDirection::Inverse); }

DenseState inv_qft(const DenseState& state) { return inv_qft(DenseState(state)); }

DenseState inv_qft(DenseState&& state) {
    return transform(std::move(state), FftDirection::Forward);
}

} // namespace emuq
