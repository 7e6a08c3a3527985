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
#include <string>
#include <vector>

#include "state.hpp"

namespace emuq {

/// Square complex matrix with power-of-two dimension, row-major storage.
struct UnitaryMatrix {
    std::size_t dim = 0;
    std::vector<complexd> entries;

    UnitaryMatrix() = default;
    UnitaryMatrix(std::size_t m, std::vector<complexd> e);

    complexd at(std::size_t row, std::size_t col) const { return entries[row * dim + col]; }
    complexd& at(std::size_t row, std::size_t col) { return entries[row * dim + col]; }

    static UnitaryMatrix identity(std::size_t m);
    /// 2x2 diag(1, e^{i*angle}) — the workhorse for phase-estimation tests.
    static UnitaryMatrix diagonal_phase(double angle);
};

/// Throws NotUnitary unless max|U^dag U - I| <= tol.
void check_unitary(const UnitaryMatrix& u, double tol = 1e-8);

/// Rayleigh quotient z = <phi|U|phi| with a residual check that phi really is
/// an eigenvector: max_i |(U phi)_i - z phi_i| <= 1e-8, |z| = 1 within 1e-8.
/// Throws NotAnEigenvector when the caller passed something else.
complexd eigenvalue_for_vector(const UnitaryMatrix& u, const DenseState& phi);

/// b-bit estimate of the eigenphase: index = round(theta * 2^b) mod 2^b,
/// rounding half away from zero, theta = arg(z)/2pi mapped into [0, 1).
struct PhaseEstimate {
    int bits;
    std::uint64_t index;
    double theta;
};

PhaseEstimate estimate_phase(const UnitaryMatrix& u, const DenseState& phi, int bits);

/// Phase estimation proper: a sparse one-hot state of logical length 2^b
/// with amplitude 1 at the estimate index. Output is always sparse — with a
/// single nontrivial entry there is nothing dense worth materializing, and
/// b up to 62 stays cheap.
SparseState qpe(const UnitaryMatrix& u, const DenseState& phi, int bits);

// Unitary text format: "UNITARY <M>" then M lines of M whitespace-separated
// "re,im" pairs.
void store_unitary(const UnitaryMatrix& u, const std::string& path);
UnitaryMatrix load_unitary(const std::string& path);

} // namespace emuq
