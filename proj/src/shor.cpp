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

#include "shor.hpp"

#include <numeric>

#include "rng.hpp"
#include "transforms.hpp"

namespace emuq {

namespace {

// Measurement seed streams within one trial.
constexpr std::uint64_t kResidueStream = 1;
constexpr std::uint64_t kPeriodStream = 2;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % mod);
}

bool is_proper_factor(std::uint64_t g, std::uint64_t X) { return g > 1 && g < X; }

} // namespace

const char* shor_status_name(ShorStatus status) noexcept {
    switch (status) {
    case ShorStatus::Success:
        return "success";
    case ShorStatus::OddPeriod:
        return "odd-period";
    case ShorStatus::TrivialFactor:
        return "trivial-factor";
    case ShorStatus::ZeroSample:
        return "zero-sample";
    }
    return "unknown";
}

std::uint64_t modpow(std::uint64_t a, std::uint64_t x, std::uint64_t X) {
    if (X < 2)
        raise(Errc::InvalidArgument, "modulus must be at least 2");
    std::uint64_t result = 1 % X;
    std::uint64_t base = a % X;
    while (x) {
        if (x & 1)
            result = mulmod(result, base, X);
        base = mulmod(base, base, X);
        x >>= 1;
    }
    return result;
}

std::uint64_t continued_fraction_reduce(std::uint64_t numerator, std::uint64_t denominator,
                                        std::uint64_t X) {
    if (denominator == 0 || (denominator & (denominator - 1)) != 0)
        raise(Errc::InvalidArgument, "denominator must be a power of two");
    if (numerator >= denominator)
        raise(Errc::InvalidArgument, "numerator must be below the denominator");
    if (X < 2)
        raise(Errc::InvalidArgument, "X must be at least 2");
    if (numerator == 0)
        raise(Errc::ZeroSample, "measured 0/" + std::to_string(denominator) +
                                    " carries no period information");

    // Walk the convergents p_k/q_k of the continued-fraction expansion and
    // keep the last denominator below X.
    std::uint64_t n = numerator, d = denominator;
    std::uint64_t q_prev = 0, q_cur = 1; // q_{-1}, q_0 for a_0 = floor(n/d) = 0
    std::uint64_t best = 1;
    while (d != 0) {
        const std::uint64_t a = n / d;
        const std::uint64_t q_next = a * q_cur + q_prev;
        if (q_next >= X)
            break;
        best = q_next;
        q_prev = q_cur;
        q_cur = q_next;
        const std::uint64_t r = n % d;
        n = d;
        d = r;
    }
    return best;
}

void validate_config(const ShorConfig& cfg) {
    if (cfg.X < 3 || cfg.X % 2 == 0)
        raise(Errc::InvalidArgument, "X must be odd and greater than 2");
    if (cfg.a <= 1 || cfg.a >= cfg.X)
        raise(Errc::InvalidArgument, "a must satisfy 1 < a < X");
    if (std::gcd(cfg.a, cfg.X) != 1)
        raise(Errc::InvalidArgument, "a and X must be co-prime (gcd " +
                                         std::to_string(std::gcd(cfg.a, cfg.X)) + ")");
    if (cfg.m < 1 || cfg.m > 62)
        raise(Errc::InvalidArgument, "period register must have 1..62 qubits");
    if (cfg.n < 1 || cfg.n > 34)
        raise(Errc::InvalidArgument, "residue register must have 1..34 qubits");
}

std::vector<double> residue_counts(const ShorConfig& cfg) {
    validate_config(cfg);
    const std::uint64_t period_len = std::uint64_t{1} << cfg.m;
    const std::uint64_t residue_len = std::uint64_t{1} << cfg.n;
    std::vector<double> counts(residue_len, 0.0);
    std::uint64_t y = 1 % cfg.X;
    for (std::uint64_t x = 0; x < period_len; ++x) {
        if (y >= residue_len)
            raise(Errc::InvalidArgument, "residue " + std::to_string(y) + " needs more than " +
                                             std::to_string(cfg.n) + " qubits");
        counts[y] += 1.0;
        y = mulmod(y, cfg.a, cfg.X);
    }
    return counts;
}

DenseState collapsed_period_register(const ShorConfig& cfg, std::uint64_t target) {
    validate_config(cfg);
    const std::uint64_t period_len = std::uint64_t{1} << cfg.m;
    DenseState phi = DenseState::zeros(period_len);
    // The residue stream is recomputed instead of kept as a 2^m-entry map;
    // this is the entanglement bookkeeping between the registers, and
    // streaming it halves the peak footprint of large runs.
    std::uint64_t y = 1 % cfg.X;
    for (std::uint64_t x = 0; x < period_len; ++x) {
        if (y == target)
            phi.amps[x] = 1.0;
        y = mulmod(y, cfg.a, cfg.X);
    }
    return phi;
}

FactoringOutcome shors_trial(const ShorConfig& cfg, std::uint64_t cap) {
    validate_config(cfg);
    const std::uint64_t period_len = std::uint64_t{1} << cfg.m;
    if (period_len > cap || (std::uint64_t{1} << cfg.n) > cap)
        raise(Errc::CapacityExceeded, "2^" + std::to_string(cfg.m) +
                                          " amplitudes exceed the cap of " + std::to_string(cap));

    // Residue register: per-residue occurrence counts, L2-normalized, then
    // measured to pick the observed residue.
    std::vector<double> counts = residue_counts(cfg);
    DenseState sigma = DenseState::zeros(counts.size());
    for (std::size_t i = 0; i < counts.size(); ++i)
        sigma.amps[i] = counts[i];
    counts.clear();
    counts.shrink_to_fit();
    normalize_inplace(sigma);
    const std::uint64_t observed = measure_index(sigma, derive_seed(cfg.seed, kResidueStream));
    sigma.amps.clear();
    sigma.amps.shrink_to_fit();

    // Period register: keep only the x with a^x = observed (mod X), then the
    // inverse transform turns the arithmetic progression into peaks at
    // multiples of 2^m / period.
    DenseState phi = collapsed_period_register(cfg, observed);
    normalize_inplace(phi);
    phi = inv_qft(std::move(phi));
    const std::uint64_t raw_index = measure_index(phi, derive_seed(cfg.seed, kPeriodStream));
    phi.amps.clear();
    phi.amps.shrink_to_fit();

    FactoringOutcome out;
    out.raw_index = raw_index;
    if (raw_index == 0) {
        out.status = ShorStatus::ZeroSample;
        return out;
    }

    out.r_tilde = continued_fraction_reduce(raw_index, period_len, cfg.X);
    if (out.r_tilde % 2 != 0) {
        out.status = ShorStatus::OddPeriod;
        return out;
    }

    const std::uint64_t v = modpow(cfg.a, out.r_tilde / 2, cfg.X);
    const std::uint64_t g_minus = std::gcd((v + cfg.X - 1) % cfg.X, cfg.X);
    const std::uint64_t g_plus = std::gcd((v + 1) % cfg.X, cfg.X);
    const bool minus_ok = is_proper_factor(g_minus, cfg.X);
    const bool plus_ok = is_proper_factor(g_plus, cfg.X);
    if (minus_ok && plus_ok) {
        out.status = ShorStatus::Success;
        out.factors = {g_minus, g_plus};
    } else if (minus_ok || plus_ok) {
        // One gcd is proper; its cofactor completes the pair.
        const std::uint64_t g = minus_ok ? g_minus : g_plus;
        out.status = ShorStatus::Success;
        out.factors = {g, cfg.X / g};
    } else {
        out.status = ShorStatus::TrivialFactor;
    }
    return out;
}

ShorRunResult shors(const ShorConfig& cfg, unsigned max_trials) {
    if (max_trials == 0)
        raise(Errc::InvalidArgument, "max_trials must be positive");
    validate_config(cfg);
    FactoringOutcome last{};
    for (unsigned trial = 0; trial < max_trials; ++trial) {
        ShorConfig trial_cfg = cfg;
        trial_cfg.seed = derive_seed(cfg.seed, 0x1000 + trial);
        last = shors_trial(trial_cfg);
        if (last.status == ShorStatus::Success)
            return ShorRunResult{last, trial + 1};
    }
    raise(Errc::ExhaustedTrials, "no factors after " + std::to_string(max_trials) +
                                     " trials (last status: " + shor_status_name(last.status) +
                                     ")");
}

} // namespace emuq
