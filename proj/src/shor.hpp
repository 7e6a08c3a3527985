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
#include <optional>
#include <utility>

#include "state.hpp"

namespace emuq {

/// One factoring problem instance: factor X using base a, with m qubits in
/// the period register and n qubits in the residue register. All randomness
/// is drawn from the seed, so a trial replays bit-identically.
struct ShorConfig {
    std::uint64_t X = 0;
    std::uint64_t a = 0;
    unsigned m = 0;
    unsigned n = 0;
    std::uint64_t seed = 0;
};

enum class ShorStatus {
    Success,       // proper factors found
    OddPeriod,     // candidate period was odd; retry with a fresh measurement
    TrivialFactor, // gcds came out 1 or X; retry
    ZeroSample,    // measured 0 in the period register; no information
};

const char* shor_status_name(ShorStatus status) noexcept;

struct FactoringOutcome {
    ShorStatus status;
    std::uint64_t r_tilde = 0;                                // candidate period
    std::optional<std::pair<std::uint64_t, std::uint64_t>> factors;
    std::uint64_t raw_index = 0;                              // measured period-register index
};

/// a^x mod X by square-and-multiply on 128-bit-safe intermediates.
std::uint64_t modpow(std::uint64_t a, std::uint64_t x, std::uint64_t X);

/// Reduces numerator/denominator (denominator a power of two) through its
/// continued-fraction convergents p_k/q_k, returning the denominator of the
/// last convergent with q_k < X. Throws ZeroSample for numerator 0.
std::uint64_t continued_fraction_reduce(std::uint64_t numerator, std::uint64_t denominator,
                                        std::uint64_t X);

/// Throws InvalidArgument unless X is odd and > 2, 1 < a < X, gcd(a, X) = 1,
/// and the register sizes are sane.
void validate_config(const ShorConfig& cfg);

// Internal stages of a trial, exposed so each can be verified on its own.

/// Residue histogram: counts[y] = |{x in [0, 2^m) : a^x mod X = y}|.
std::vector<double> residue_counts(const ShorConfig& cfg);

/// Period register after observing residue y: amplitude 1 at every x with
/// a^x mod X = y, zero elsewhere (unnormalized). The surviving support is an
/// arithmetic progression with the true period as its stride.
DenseState collapsed_period_register(const ShorConfig& cfg, std::uint64_t y);

/// One full trial: build registers, measure the residue register, collapse,
/// inverse-QFT, measure the period register, continued fractions, gcd.
FactoringOutcome shors_trial(const ShorConfig& cfg, std::uint64_t cap = dense_cap());

struct ShorRunResult {
    FactoringOutcome outcome;
    unsigned trials_used = 0;
};

/// Retry driver: runs trials with per-trial derived seeds until Success.
/// Throws ExhaustedTrials after max_trials failures.
ShorRunResult shors(const ShorConfig& cfg, unsigned max_trials);

} // namespace emuq
