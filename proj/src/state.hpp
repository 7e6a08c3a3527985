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

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "config.hpp"
#include "errors.hpp"

namespace emuq {

using complexd = std::complex<double>;

/// Sparse entries with magnitude at or below this are dropped on write.
inline constexpr double kPruneThreshold = 1e-15;

/// Tolerance for "is this input normalized" checks on entry to an operation.
inline constexpr double kNormEntryTol = 1e-6;

/// Norm guarantee on the output of normalize().
inline constexpr double kNormExitTol = 1e-12;

/// Contiguous array of complex amplitudes. Length is not restricted to
/// powers of two except where an operation requires it.
struct DenseState {
    std::vector<complexd> amps;

    DenseState() = default;
    explicit DenseState(std::vector<complexd> a) : amps(std::move(a)) {}

    std::size_t len() const { return amps.size(); }
    double norm() const;
    bool is_normalized(double tol = kNormEntryTol) const;

    static DenseState zeros(std::size_t n);
    static DenseState basis(std::size_t n, std::size_t index);
};

/// Map from index to amplitude with a declared logical length. The length is
/// an arbitrary-precision integer so states far beyond addressable memory
/// (e.g. exponentiation outputs) stay representable.
class SparseState {
  public:
    using EntryMap = std::map<mpz_class, complexd>;

    explicit SparseState(mpz_class logical_len);

    /// Builds a state from raw entries: prunes magnitudes <= kPruneThreshold,
    /// rejects out-of-range indices and non-finite amplitudes.
    static SparseState from_entries(mpz_class logical_len, EntryMap raw);

    static SparseState basis(mpz_class logical_len, mpz_class index);

    const mpz_class& logical_len() const { return logical_len_; }
    const EntryMap& entries() const { return entries_; }
    std::size_t nnz() const { return entries_.size(); }

    complexd at(const mpz_class& index) const;
    double norm() const;
    bool is_normalized(double tol = kNormEntryTol) const;

  private:
    mpz_class logical_len_;
    EntryMap entries_;

    friend SparseState normalize(const SparseState& state);
};

/// Rescales to unit L2 norm. Throws ZeroVector when every amplitude is
/// numerically zero (an invalid quantum state).
DenseState normalize(const DenseState& state);

/// Same contract, no copy; used on buffers too large to duplicate.
void normalize_inplace(DenseState& state);

/// Sparse counterpart; the output keeps exactly the input's nonzero support.
SparseState normalize(const SparseState& state);

struct MeasureResult {
    DenseState collapsed; // one-hot: single entry equal to 1
    std::size_t index;
};

/// Projective measurement via a seeded inverse-CDF walk over |amp|^2.
/// Identical seed and state replay the same outcome.
MeasureResult measure(const DenseState& state, std::uint64_t seed);

/// Measurement without materializing the collapsed state; what the big
/// register paths use.
std::size_t measure_index(const DenseState& state, std::uint64_t seed);

DenseState dense_from_sparse(const SparseState& state, std::uint64_t cap = dense_cap());
SparseState sparse_from_dense(const DenseState& state);

// State-vector text format (shared by dense and sparse states):
//   STATE <N>
//   <index> <re> <im>          one line per nonzero, indices strictly increasing
// Omitted indices are zero. Floats are written with 17 significant digits so
// a store/load round trip is bit-exact.
void store_state(const DenseState& state, const std::string& path);
void store_state(const SparseState& state, const std::string& path);
DenseState load_dense_state(const std::string& path, std::uint64_t cap = dense_cap());
SparseState load_sparse_state(const std::string& path);

} // namespace emuq
