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

#include "bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>

#include "arithmetic.hpp"
#include "phase_estimation.hpp"
#include "rng.hpp"
#include "shor.hpp"
#include "state.hpp"
#include "transforms.hpp"

namespace emuq {

namespace {

// Sink defeating dead-code elimination of the timed bodies.
volatile double g_bench_sink = 0.0;
void consume(double v) { g_bench_sink = g_bench_sink + v; }

// Sparse sweeps vary the nonzero count on operands of this fixed width.
constexpr unsigned kSparseQubits = 10;

double gaussian(SeededRng& rng) {
    // Box-Muller; u clamped away from 0 for the log.
    double u = rng.next_unit();
    double v = rng.next_unit();
    if (u < 1e-300)
        u = 1e-300;
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * 3.14159265358979323846 * v);
}

DenseState random_dense_state(std::size_t len, SeededRng& rng) {
    DenseState s = DenseState::zeros(len);
    for (complexd& a : s.amps)
        a = complexd{gaussian(rng), gaussian(rng)};
    normalize_inplace(s);
    return s;
}

DenseState random_basis_state(std::size_t len, SeededRng& rng) {
    return DenseState::basis(len, rng.next_u64() % len);
}

SparseState random_sparse_state(const mpz_class& logical_len, std::size_t nnz, SeededRng& rng) {
    const std::uint64_t len = logical_len.get_ui();
    std::set<std::uint64_t> indices;
    while (indices.size() < nnz)
        indices.insert(rng.next_u64() % len);
    SparseState::EntryMap m;
    for (std::uint64_t idx : indices)
        m.emplace(mpz_class(static_cast<unsigned long>(idx)),
                  complexd{gaussian(rng), gaussian(rng)});
    return normalize(SparseState::from_entries(logical_len, std::move(m)));
}

double first_amp(const DenseState& s) { return s.amps.empty() ? 0.0 : s.amps[0].real(); }

double first_amp(const SparseState& s) {
    return s.entries().empty() ? 0.0 : s.entries().begin()->second.real();
}

/// Builds the closure to be timed. Everything here runs outside the timer.
std::function<void()> prepare_op(const std::string& op, std::uint64_t size, SeededRng& rng) {
    if (op == "add" || op == "mul" || op == "exp-dense" || op == "add-basis") {
        if (size < 1 || size > 26)
            raise(Errc::InvalidArgument, "dense sweeps support 1..26 qubits");
        const std::size_t len = std::size_t{1} << size;
        auto a = std::make_shared<DenseState>();
        auto b = std::make_shared<DenseState>();
        if (op == "add-basis") {
            *a = random_basis_state(len, rng);
            *b = random_basis_state(len, rng);
        } else {
            *a = random_dense_state(len, rng);
            *b = random_dense_state(len, rng);
        }
        if (op == "mul")
            return [a, b] { consume(first_amp(multiply(*a, *b))); };
        if (op == "exp-dense")
            return [a, b] { consume(first_amp(exponentiate(*a, *b))); };
        return [a, b] { consume(first_amp(add(*a, *b))); };
    }

    if (op == "add-sparse" || op == "mul-sparse" || op == "exp-sparse") {
        if (size < 1 || size > (std::uint64_t{1} << kSparseQubits))
            raise(Errc::InvalidArgument, "sparse sweeps vary the nonzero count in [1, 2^" +
                                             std::to_string(kSparseQubits) + "]");
        const mpz_class len = mpz_class(1) << kSparseQubits;
        auto a = std::make_shared<SparseState>(random_sparse_state(len, size, rng));
        auto b = std::make_shared<SparseState>(random_sparse_state(len, size, rng));
        if (op == "add-sparse")
            return [a, b] { consume(first_amp(add(*a, *b))); };
        if (op == "mul-sparse")
            return [a, b] { consume(first_amp(multiply(*a, *b))); };
        return [a, b] { consume(first_amp(exponentiate(*a, *b))); };
    }

    if (op == "qft" || op == "iqft") {
        if (size < 1 || size > 26)
            raise(Errc::InvalidArgument, "transform sweeps support 1..26 qubits");
        auto s = std::make_shared<DenseState>(random_dense_state(std::size_t{1} << size, rng));
        if (op == "iqft")
            return [s] { consume(first_amp(inv_qft(*s))); };
        return [s] { consume(first_amp(qft(*s))); };
    }

    if (op == "qpe-in-b") {
        if (size < 1 || size > 62)
            raise(Errc::InvalidArgument, "qpe precision sweep supports 1..62 bits");
        auto u = std::make_shared<UnitaryMatrix>(UnitaryMatrix::diagonal_phase(rng.next_unit()));
        auto phi = std::make_shared<DenseState>(DenseState::basis(2, 1));
        const int bits = static_cast<int>(size);
        return [u, phi, bits] { consume(first_amp(qpe(*u, *phi, bits))); };
    }

    if (op == "measure") {
        if (size < 1 || size > 26)
            raise(Errc::InvalidArgument, "measure sweep supports 1..26 qubits");
        auto s = std::make_shared<DenseState>(random_dense_state(std::size_t{1} << size, rng));
        const std::uint64_t shot_seed = rng.next_u64();
        return [s, shot_seed] { consume(static_cast<double>(measure_index(*s, shot_seed))); };
    }

    raise(Errc::InvalidArgument, "unknown benchmark op '" + op + "'");
}

/// Wall time per invocation. Fast ops are batched until the timed window
/// reaches ~100us so single-shot clock jitter cannot dominate the record;
/// the reported figure is always seconds per one invocation.
double time_op(const std::function<void()>& run) {
    using clock = std::chrono::steady_clock;
    constexpr double kMinWindow = 100e-6;
    std::uint64_t reps = 1;
    for (;;) {
        const auto t0 = clock::now();
        for (std::uint64_t r = 0; r < reps; ++r)
            run();
        const double elapsed = std::chrono::duration<double>(clock::now() - t0).count();
        if (elapsed >= kMinWindow)
            return elapsed / static_cast<double>(reps);
        const double target = elapsed > 0.0 ? (kMinWindow * 1.5) / (elapsed / reps) : reps * 16.0;
        reps = std::max(reps * 2, static_cast<std::uint64_t>(target) + 1);
    }
}

} // namespace

const std::vector<std::string>& benchmark_ops() {
    static const std::vector<std::string> ops = {
        "add",    "add-basis",  "mul",        "exp-dense", "add-sparse", "mul-sparse",
        "exp-sparse", "qft",    "iqft",       "qpe-in-b",  "measure",
    };
    return ops;
}

BenchSweep run_benchmark(const std::string& op, const std::vector<std::uint64_t>& sizes,
                         unsigned trials, std::uint64_t seed) {
    if (trials == 0)
        raise(Errc::InvalidArgument, "trial count must be positive");
    BenchSweep sweep;
    for (std::uint64_t size : sizes) {
        bool skipped = false;
        for (unsigned trial = 0; trial < trials && !skipped; ++trial) {
            SeededRng rng(derive_seed(seed, size * 1000003 + trial));
            try {
                auto run = prepare_op(op, size, rng);
                sweep.records.push_back(BenchRecord{op, size, trial, time_op(run)});
            } catch (const Error& e) {
                if (e.code() != Errc::CapacityExceeded)
                    throw;
                sweep.skipped.push_back(size);
                skipped = true;
            }
        }
    }
    return sweep;
}

FitResult fit_exponential(const std::vector<BenchRecord>& records) {
    std::map<std::uint64_t, std::pair<double, unsigned>> by_size; // n -> (sum, count)
    for (const BenchRecord& r : records) {
        auto& [sum, count] = by_size[r.n];
        sum += r.seconds;
        ++count;
    }
    if (by_size.size() < 3)
        raise(Errc::InsufficientData, "exponential fit needs at least 3 distinct sizes, got " +
                                          std::to_string(by_size.size()));

    // Least squares on (n, log2(mean seconds)).
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double count = static_cast<double>(by_size.size());
    for (const auto& [n, acc] : by_size) {
        const double x = static_cast<double>(n);
        const double y = std::log2(acc.first / acc.second);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double denom = count * sxx - sx * sx;
    const double k = (count * sxy - sx * sy) / denom;
    const double intercept = (sy - k * sx) / count;

    double mse = 0.0;
    for (const auto& [n, acc] : by_size) {
        const double resid =
            std::log2(acc.first / acc.second) - (k * static_cast<double>(n) + intercept);
        mse += resid * resid;
    }
    mse /= count;
    return FitResult{std::exp2(intercept), k, mse};
}

void write_csv(const std::vector<BenchRecord>& records, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        raise(Errc::InvalidArgument, "cannot open " + path + " for writing");
    out << "op,n,trial,seconds\n";
    char buf[64];
    for (const BenchRecord& r : records) {
        std::snprintf(buf, sizeof(buf), "%.9g", r.seconds);
        out << r.op << ',' << r.n << ',' << r.trial << ',' << buf << "\n";
    }
    out.flush();
    if (!out)
        raise(Errc::InvalidArgument, "short write to " + path);
}

} // namespace emuq
