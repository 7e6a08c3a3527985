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

#include "arithmetic.hpp"

#include <cmath>

namespace emuq {

namespace {

// A single exponentiation index i^j may itself be a huge integer; cap its
// size so absurd requests fail cleanly instead of exhausting memory. 2^28
// bits = 32 MiB per index, comfortably above the 20-qubit operand scale.
constexpr std::uint64_t kMaxIndexBits = std::uint64_t{1} << 28;

void check_dense_inputs(const DenseState& a, const DenseState& b) {
    if (!a.is_normalized() || !b.is_normalized())
        raise(Errc::NotNormalized, "arithmetic operands must be normalized");
}

void check_sparse_inputs(const SparseState& a, const SparseState& b) {
    if (!a.is_normalized() || !b.is_normalized())
        raise(Errc::NotNormalized, "arithmetic operands must be normalized");
}

void check_cap(unsigned __int128 out_len, std::uint64_t cap, const char* op) {
    if (out_len > cap)
        raise(Errc::CapacityExceeded,
              std::string("dense ") + op + " output would exceed the amplitude cap of " +
                  std::to_string(cap) + "; use the sparse backend");
}

DenseState finish_dense(DenseState out) {
    double norm_sq = 0.0;
    for (const complexd& v : out.amps)
        norm_sq += std::norm(v);
    if (norm_sq == 0.0)
        raise(Errc::ZeroVector, "amplitude accumulation cancelled to zero");
    normalize_inplace(out);
    return out;
}

/// i^j over u64 indices; the result is bounded by the already-checked output
/// length, so no overflow handling is needed here.
std::uint64_t pow_index(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1; // covers 0^0 = 1
    for (std::uint64_t e = 0; e < exp; ++e)
        r *= base;
    return r;
}

mpz_class sparse_pow_index(const mpz_class& base, const mpz_class& exp) {
    if (base == 0)
        return exp == 0 ? mpz_class(1) : mpz_class(0);
    if (base == 1 || exp == 0)
        return mpz_class(1);
    if (!exp.fits_ulong_p())
        raise(Errc::CapacityExceeded, "exponent " + exp.get_str() + " produces an index too "
                                                                    "large to represent");
    const unsigned long e = exp.get_ui();
    const std::uint64_t base_bits = mpz_sizeinbase(base.get_mpz_t(), 2);
    if (base_bits > kMaxIndexBits / e)
        raise(Errc::CapacityExceeded, "index " + base.get_str() + "^" + exp.get_str() +
                                          " exceeds the representable size limit");
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

template <typename IndexFn>
SparseState combine_sparse(const SparseState& a, const SparseState& b, mpz_class out_len,
                           IndexFn&& index_of) {
    SparseState::EntryMap acc;
    for (const auto& [i, av] : a.entries())
        for (const auto& [j, bv] : b.entries())
            acc[index_of(i, j)] += av * bv;
    SparseState out = SparseState::from_entries(std::move(out_len), std::move(acc));
    return normalize(out); // throws ZeroVector if everything cancelled/pruned
}

} // namespace

DenseState add(const DenseState& a, const DenseState& b, std::uint64_t cap) {
    check_dense_inputs(a, b);
    const std::size_t out_len = 2 * std::max(a.len(), b.len());
    check_cap(out_len, cap, "add");
    DenseState out = DenseState::zeros(out_len);
    for (std::size_t i = 0; i < a.len(); ++i) {
        const complexd av = a.amps[i];
        if (av == complexd{})
            continue;
        for (std::size_t j = 0; j < b.len(); ++j)
            out.amps[i + j] += av * b.amps[j];
    }
    return finish_dense(std::move(out));
}

DenseState multiply(const DenseState& a, const DenseState& b, std::uint64_t cap) {
    check_dense_inputs(a, b);
    const auto out_len =
        static_cast<unsigned __int128>(a.len()) * static_cast<unsigned __int128>(b.len());
    check_cap(out_len, cap, "multiply");
    DenseState out = DenseState::zeros(static_cast<std::size_t>(out_len));
    for (std::size_t i = 0; i < a.len(); ++i) {
        const complexd av = a.amps[i];
        if (av == complexd{})
            continue;
        for (std::size_t j = 0; j < b.len(); ++j)
            out.amps[i * j] += av * b.amps[j];
    }
    return finish_dense(std::move(out));
}

DenseState exponentiate(const DenseState& a, const DenseState& b, std::uint64_t cap) {
    check_dense_inputs(a, b);
    // Output length Na^Nb explodes quickly; detect the blowup while
    // multiplying up so e.g. 16^16 fails as CapacityExceeded rather than
    // wrapping or exhausting the allocator.
    unsigned __int128 out_len = 1;
    if (a.len() > 1) {
        for (std::size_t e = 0; e < b.len(); ++e) {
            out_len *= a.len();
            check_cap(out_len, cap, "exponentiate");
        }
    }
    DenseState out = DenseState::zeros(static_cast<std::size_t>(out_len));
    for (std::size_t i = 0; i < a.len(); ++i) {
        const complexd av = a.amps[i];
        if (av == complexd{})
            continue;
        for (std::size_t j = 0; j < b.len(); ++j)
            out.amps[pow_index(i, j)] += av * b.amps[j];
    }
    return finish_dense(std::move(out));
}

SparseState add(const SparseState& a, const SparseState& b) {
    check_sparse_inputs(a, b);
    mpz_class out_len = 2 * std::max(a.logical_len(), b.logical_len());
    return combine_sparse(a, b, std::move(out_len),
                          [](const mpz_class& i, const mpz_class& j) { return mpz_class(i + j); });
}

SparseState multiply(const SparseState& a, const SparseState& b) {
    check_sparse_inputs(a, b);
    mpz_class out_len = a.logical_len() * b.logical_len();
    return combine_sparse(a, b, std::move(out_len),
                          [](const mpz_class& i, const mpz_class& j) { return mpz_class(i * j); });
}

SparseState exponentiate(const SparseState& a, const SparseState& b) {
    check_sparse_inputs(a, b);
    // Logical length Na^Nb is held exactly as a big integer; it routinely
    // exceeds any machine-array bound (that is the point of this backend).
    if (!b.logical_len().fits_ulong_p())
        raise(Errc::CapacityExceeded,
              "exponent register length " + b.logical_len().get_str() + " is too large");
    const unsigned long nb = b.logical_len().get_ui();
    const std::uint64_t base_bits = mpz_sizeinbase(a.logical_len().get_mpz_t(), 2);
    if (a.logical_len() > 1 && base_bits > kMaxIndexBits / nb)
        raise(Errc::CapacityExceeded, "output length " + a.logical_len().get_str() + "^" +
                                          std::to_string(nb) +
                                          " exceeds the representable size limit");
    mpz_class out_len;
    mpz_pow_ui(out_len.get_mpz_t(), a.logical_len().get_mpz_t(), nb);
    return combine_sparse(a, b, std::move(out_len),
                          [](const mpz_class& i, const mpz_class& j) {
                              return sparse_pow_index(i, j);
                          });
}

} // namespace emuq
