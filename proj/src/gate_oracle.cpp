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

#include "gate_oracle.hpp"

#include <bit>
#include <cmath>
#include <numbers>

namespace emuq {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244;

void check_qubit(const Circuit& c, int q) {
    if (q < 0 || q >= c.num_qubits)
        raise(Errc::IndexOutOfRange, "qubit " + std::to_string(q) + " not in [0, " +
                                         std::to_string(c.num_qubits) + ")");
}

void check_pair(const Circuit& c, int a, int b) {
    check_qubit(c, a);
    check_qubit(c, b);
    if (a == b)
        raise(Errc::IndexOutOfRange, "two-qubit gate needs distinct qubits");
}

/// Mask selecting qubit q under the qubit-0-is-MSB convention.
std::size_t qubit_mask(int num_qubits, int q) {
    return std::size_t{1} << (num_qubits - 1 - q);
}

std::array<complexd, 4> mat2_mul(const std::array<complexd, 4>& a,
                                 const std::array<complexd, 4>& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

std::array<complexd, 4> mat2_pow(std::array<complexd, 4> base, std::uint64_t exp) {
    std::array<complexd, 4> result{1.0, 0.0, 0.0, 1.0};
    while (exp) {
        if (exp & 1)
            result = mat2_mul(result, base);
        base = mat2_mul(base, base);
        exp >>= 1;
    }
    return result;
}

} // namespace

Circuit::Circuit(int n) : num_qubits(n) {
    if (n < 1 || n > 30)
        raise(Errc::InvalidArgument, "circuit qubit count must be in [1, 30]");
}

Circuit& Circuit::h(int q) {
    check_qubit(*this, q);
    gates.push_back({Gate::Kind::H, q, -1, 0.0, {}});
    return *this;
}

Circuit& Circuit::x(int q) {
    check_qubit(*this, q);
    gates.push_back({Gate::Kind::X, q, -1, 0.0, {}});
    return *this;
}

Circuit& Circuit::phase(int q, double theta) {
    check_qubit(*this, q);
    gates.push_back({Gate::Kind::Phase, q, -1, theta, {}});
    return *this;
}

Circuit& Circuit::cphase(int control, int target, double theta) {
    check_pair(*this, control, target);
    gates.push_back({Gate::Kind::ControlledPhase, target, control, theta, {}});
    return *this;
}

Circuit& Circuit::swap(int a, int b) {
    check_pair(*this, a, b);
    gates.push_back({Gate::Kind::Swap, b, a, 0.0, {}});
    return *this;
}

Circuit& Circuit::cu(int control, int target, const std::array<complexd, 4>& u) {
    check_pair(*this, control, target);
    gates.push_back({Gate::Kind::ControlledU, target, control, 0.0, u});
    return *this;
}

DenseState apply_circuit(const Circuit& c, const DenseState& initial) {
    const std::size_t n = std::size_t{1} << c.num_qubits;
    if (initial.len() != n)
        raise(Errc::InvalidArgument, "initial state length " + std::to_string(initial.len()) +
                                         " does not match " + std::to_string(c.num_qubits) +
                                         " qubits");
    if (!initial.is_normalized())
        raise(Errc::NotNormalized, "initial state must be normalized");

    DenseState state = initial;
    std::vector<complexd>& psi = state.amps;

    for (const Gate& g : c.gates) {
        switch (g.kind) {
        case Gate::Kind::H: {
            const std::size_t m = qubit_mask(c.num_qubits, g.target);
            for (std::size_t i = 0; i < n; ++i) {
                if (i & m)
                    continue;
                const complexd lo = psi[i], hi = psi[i | m];
                psi[i] = (lo + hi) * kInvSqrt2;
                psi[i | m] = (lo - hi) * kInvSqrt2;
            }
            break;
        }
        case Gate::Kind::X: {
            const std::size_t m = qubit_mask(c.num_qubits, g.target);
            for (std::size_t i = 0; i < n; ++i)
                if (!(i & m))
                    std::swap(psi[i], psi[i | m]);
            break;
        }
        case Gate::Kind::Phase: {
            const std::size_t m = qubit_mask(c.num_qubits, g.target);
            const complexd w = std::polar(1.0, g.theta);
            for (std::size_t i = 0; i < n; ++i)
                if (i & m)
                    psi[i] *= w;
            break;
        }
        case Gate::Kind::ControlledPhase: {
            const std::size_t mc = qubit_mask(c.num_qubits, g.control);
            const std::size_t mt = qubit_mask(c.num_qubits, g.target);
            const complexd w = std::polar(1.0, g.theta);
            for (std::size_t i = 0; i < n; ++i)
                if ((i & mc) && (i & mt))
                    psi[i] *= w;
            break;
        }
        case Gate::Kind::Swap: {
            const std::size_t ma = qubit_mask(c.num_qubits, g.control);
            const std::size_t mb = qubit_mask(c.num_qubits, g.target);
            for (std::size_t i = 0; i < n; ++i)
                if ((i & ma) && !(i & mb))
                    std::swap(psi[i], psi[(i ^ ma) | mb]);
            break;
        }
        case Gate::Kind::ControlledU: {
            const std::size_t mc = qubit_mask(c.num_qubits, g.control);
            const std::size_t mt = qubit_mask(c.num_qubits, g.target);
            for (std::size_t i = 0; i < n; ++i) {
                if (!(i & mc) || (i & mt))
                    continue;
                const complexd lo = psi[i], hi = psi[i | mt];
                psi[i] = g.u[0] * lo + g.u[1] * hi;
                psi[i | mt] = g.u[2] * lo + g.u[3] * hi;
            }
            break;
        }
        }
    }
    return state;
}

Circuit qft_circuit(int n) {
    if (n < 1 || n > 12)
        raise(Errc::InvalidArgument, "qft circuit supports 1..12 qubits");
    Circuit c(n);
    for (int q = 0; q < n; ++q) {
        c.h(q);
        for (int j = q + 1; j < n; ++j)
            c.cphase(j, q, 2.0 * std::numbers::pi / std::exp2(j - q + 1));
    }
    for (int q = 0; q < n / 2; ++q)
        c.swap(q, n - 1 - q);
    return c;
}

Circuit qpe_circuit(const UnitaryMatrix& u, int bits) {
    if (u.dim != 2)
        raise(Errc::InvalidArgument, "qpe circuit expects a 2x2 unitary");
    if (bits < 1 || bits > 12)
        raise(Errc::InvalidArgument, "qpe circuit supports 1..12 precision bits");
    check_unitary(u);

    Circuit c(bits + 1);
    const int eigen = bits; // eigenvector qubit, prepared to |1>
    c.x(eigen);
    for (int q = 0; q < bits; ++q)
        c.h(q);

    // Counting qubit q carries bit (bits-1-q) of the estimate, so it
    // controls U^(2^(bits-1-q)).
    const std::array<complexd, 4> base{u.at(0, 0), u.at(0, 1), u.at(1, 0), u.at(1, 1)};
    for (int q = 0; q < bits; ++q)
        c.cu(q, eigen, mat2_pow(base, std::uint64_t{1} << (bits - 1 - q)));

    // Inverse QFT on the counting register: reversed gate order, conjugated
    // phases. Indices carry over because the counting qubits are 0..bits-1.
    const Circuit fwd = qft_circuit(bits);
    for (auto it = fwd.gates.rbegin(); it != fwd.gates.rend(); ++it) {
        Gate g = *it;
        g.theta = -g.theta;
        c.gates.push_back(g);
    }
    return c;
}

std::vector<complexd> naive_dft(const std::vector<complexd>& x, FftDirection direction) {
    const std::size_t n = x.size();
    if (n == 0)
        raise(Errc::InvalidArgument, "empty input");
    const double sign = direction == FftDirection::Forward ? -1.0 : 1.0;

    std::vector<complexd> roots(n);
    for (std::size_t r = 0; r < n; ++r)
        roots[r] = std::polar(1.0, sign * 2.0 * std::numbers::pi * static_cast<double>(r) /
                                       static_cast<double>(n));

    std::vector<complexd> y(n);
    for (std::size_t k = 0; k < n; ++k) {
        complexd acc{0.0, 0.0};
        for (std::size_t j = 0; j < n; ++j)
            acc += x[j] * roots[(j * k) % n];
        y[k] = acc;
    }
    if (direction == FftDirection::Inverse) {
        const double scale = 1.0 / static_cast<double>(n);
        for (complexd& v : y)
            v *= scale;
    }
    return y;
}

std::vector<double> register_distribution(const DenseState& state, int bits) {
    if (!is_power_of_two(state.len()))
        raise(Errc::NotPowerOfTwo, "state length must be a power of two");
    const int total = std::countr_zero(state.len());
    if (bits < 1 || bits > total)
        raise(Errc::InvalidArgument, "register width out of range");
    std::vector<double> dist(std::size_t{1} << bits, 0.0);
    const int shift = total - bits;
    for (std::size_t i = 0; i < state.len(); ++i)
        dist[i >> shift] += std::norm(state.amps[i]);
    return dist;
}

} // namespace emuq
