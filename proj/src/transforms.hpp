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

#include "fft.hpp"
#include "state.hpp"

namespace emuq {

// Sign convention (a real subtlety, pinned deliberately): qft applies the
// e^{+2*pi*i*j*k/N} kernel and inv_qft the e^{-2*pi*i*j*k/N} kernel — the
// OPPOSITE of the usual signal-processing forward/inverse naming. In DSP
// terms, qft is an inverse DFT rescaled to be unitary.

/// qft(x)_k = normalize( (1/sqrt(N)) * sum_j x_j e^{+2*pi*i*j*k/N} ).
/// Input must be normalized and of power-of-two length.
DenseState qft(const DenseState& state);
DenseState qft(DenseState&& state);

/// Inverse transform: e^{-2*pi*i*j*k/N} kernel; inv_qft(qft(x)) == x.
DenseState inv_qft(const DenseState& state);
DenseState inv_qft(DenseState&& state);

} // namespace emuq
