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

#include <array>
#include <vector>

#include "fft.hpp"
#include "phase_estimation.hpp"
#include "state.hpp"

namespace emuq {

// A deliberately small gate-level state-vector simulator. It exists to
// cross-check the emulation paths from an independent direction: gates are
// applied one by one as local unitaries, never materializing 2^n x 2^n
// matrices.
//
// Bit ordering: qubit 0 is the MOST significant bit of the state index, so
// the n-qubit basis state |q0 q1 ... q_{n-1}> has index q0*2^{n-1} + ... +
// q_{n-1}. This matches the integer encoding the arithmetic module uses.

struct Gate {
    enum class Kind { H, X, Phase, ControlledPhase, Swap, ControlledU };

    Kind kind;
    int target = -1;
    int control = -1; // second qubit for Swap, control for controlled kinds
    double theta = 0.0;
    std::array<complexd, 4> u{}; // row-major 2x2, ControlledU only
};

struct Circuit {
    int num_qubits = 0;
    std::vector<Gate> gates;

    explicit Circuit(int n);

    Circuit& h(int q);
    Circuit& x(int q);
    Circuit& phase(int q, double theta);
    Circuit& cphase(int control, int target, double theta);
    Circuit& swap(int a, int b);
    Circuit& cu(int control, int target, const std::array<complexd, 4>& u);
};

/// Applies gates left to right to a private copy of the initial state.
DenseState apply_circuit(const Circuit& c, const DenseState& initial);

/// Standard QFT circuit: per-qubit Hadamard + controlled phases + final
/// qubit-reversal swaps. n(n-1)/2 two-qubit gates, n one-qubit gates.
Circuit qft_circuit(int n);

/// Textbook phase-estimation circuit for a 2x2 unitary whose eigenvector |1>
/// is prepared with an X gate on the last qubit: Hadamards on the b counting
/// qubits, controlled powers of U, then the inverse QFT.
Circuit qpe_circuit(const UnitaryMatrix& u, int bits);

/// O(N^2) literal evaluation of the transform sums; ground truth for the
/// FFT kernel. Accepts any length, not just powers of two.
std::vector<complexd> naive_dft(const std::vector<complexd>& x, FftDirection direction);

/// Marginal |amplitude|^2 distribution over the top `bits` qubits.
std::vector<double> register_distribution(const DenseState& state, int bits);

} // namespace emuq
