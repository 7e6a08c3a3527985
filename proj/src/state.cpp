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

#include "state.hpp"

#include <bit>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "rng.hpp"

namespace emuq {

namespace {

bool has_nonzero_bits(complexd a) {
    // -0.0 counts as nonzero so stored states reload bit-exactly.
    return std::bit_cast<std::uint64_t>(a.real()) != 0 ||
           std::bit_cast<std::uint64_t>(a.imag()) != 0;
}

double sum_sq_magnitude(const std::vector<complexd>& amps) {
    double total = 0.0;
    for (const complexd& a : amps)
        total += std::norm(a);
    return total;
}

void check_finite_norm(double norm_sq, const char* what) {
    if (!std::isfinite(norm_sq))
        raise(Errc::InvalidArgument, std::string(what) + " contains non-finite amplitudes");
}

std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

double DenseState::norm() const {
    return std::sqrt(sum_sq_magnitude(amps));
}

bool DenseState::is_normalized(double tol) const {
    return std::abs(norm() - 1.0) <= tol;
}

DenseState DenseState::zeros(std::size_t n) {
    if (n == 0)
        raise(Errc::InvalidArgument, "state length must be at least 1");
    return DenseState(std::vector<complexd>(n));
}

DenseState DenseState::basis(std::size_t n, std::size_t index) {
    if (index >= n)
        raise(Errc::IndexOutOfRange, "basis index " + std::to_string(index) +
                                         " not below length " + std::to_string(n));
    DenseState s = zeros(n);
    s.amps[index] = 1.0;
    return s;
}

SparseState::SparseState(mpz_class logical_len) : logical_len_(std::move(logical_len)) {
    if (logical_len_ < 1)
        raise(Errc::InvalidArgument, "logical length must be at least 1");
}

SparseState SparseState::from_entries(mpz_class logical_len, EntryMap raw) {
    SparseState s(std::move(logical_len));
    for (auto& [index, amp] : raw) {
        if (!std::isfinite(amp.real()) || !std::isfinite(amp.imag()))
            raise(Errc::InvalidArgument, "non-finite amplitude at index " + index.get_str());
        if (index < 0 || index >= s.logical_len_)
            raise(Errc::IndexOutOfRange,
                  "index " + index.get_str() + " not in [0, " + s.logical_len_.get_str() + ")");
        if (std::abs(amp) > kPruneThreshold)
            s.entries_.emplace(index, amp);
    }
    return s;
}

SparseState SparseState::basis(mpz_class logical_len, mpz_class index) {
    EntryMap m;
    m.emplace(std::move(index), complexd{1.0, 0.0});
    return from_entries(std::move(logical_len), std::move(m));
}

complexd SparseState::at(const mpz_class& index) const {
    auto it = entries_.find(index);
    return it == entries_.end() ? complexd{0.0, 0.0} : it->second;
}

double SparseState::norm() const {
    double total = 0.0;
    for (const auto& [index, amp] : entries_)
        total += std::norm(amp);
    return std::sqrt(total);
}

bool SparseState::is_normalized(double tol) const {
    return std::abs(norm() - 1.0) <= tol;
}

DenseState normalize(const DenseState& state) {
    DenseState out = state;
    normalize_inplace(out);
    return out;
}

void normalize_inplace(DenseState& state) {
    double norm_sq = sum_sq_magnitude(state.amps);
    check_finite_norm(norm_sq, "state");
    if (norm_sq == 0.0)
        raise(Errc::ZeroVector, "cannot normalize the all-zero state");
    double inv = 1.0 / std::sqrt(norm_sq);
    for (complexd& a : state.amps)
        a *= inv;
}

SparseState normalize(const SparseState& state) {
    double norm = state.norm();
    check_finite_norm(norm, "state");
    if (norm == 0.0)
        raise(Errc::ZeroVector, "cannot normalize the all-zero state");
    // Bypass from_entries: normalization must keep the input's support even
    // if a rescaled amplitude lands below the prune threshold.
    SparseState out(state.logical_len());
    double inv = 1.0 / norm;
    for (const auto& [index, amp] : state.entries())
        out.entries_.emplace(index, amp * inv);
    return out;
}

std::size_t measure_index(const DenseState& state, std::uint64_t seed) {
    double total = sum_sq_magnitude(state.amps);
    check_finite_norm(total, "state");
    if (std::abs(std::sqrt(total) - 1.0) > kNormEntryTol)
        raise(Errc::NotNormalized,
              "measurement requires a normalized state (norm " + fmt_double(std::sqrt(total)) + ")");

    SeededRng rng(seed);
    double target = rng.next_unit() * total;
    double cum = 0.0;
    std::size_t last_nonzero = state.len();
    std::size_t chosen = state.len();
    for (std::size_t i = 0; i < state.len(); ++i) {
        double p = std::norm(state.amps[i]);
        if (p > 0.0)
            last_nonzero = i;
        cum += p;
        if (cum > target) {
            chosen = i;
            break;
        }
    }
    if (chosen == state.len())
        chosen = last_nonzero; // floating-point residue pushed target past cum
    return chosen;
}

MeasureResult measure(const DenseState& state, std::uint64_t seed) {
    std::size_t chosen = measure_index(state, seed);
    return MeasureResult{DenseState::basis(state.len(), chosen), chosen};
}

DenseState dense_from_sparse(const SparseState& state, std::uint64_t cap) {
    if (state.logical_len() > cap)
        raise(Errc::CapacityExceeded, "logical length " + state.logical_len().get_str() +
                                          " exceeds the dense amplitude cap " +
                                          std::to_string(cap));
    DenseState out = DenseState::zeros(state.logical_len().get_ui());
    for (const auto& [index, amp] : state.entries())
        out.amps[index.get_ui()] = amp;
    return out;
}

SparseState sparse_from_dense(const DenseState& state) {
    SparseState::EntryMap m;
    for (std::size_t i = 0; i < state.len(); ++i)
        if (has_nonzero_bits(state.amps[i]))
            m.emplace(mpz_class(static_cast<unsigned long>(i)), state.amps[i]);
    return SparseState::from_entries(mpz_class(static_cast<unsigned long>(state.len())),
                                     std::move(m));
}

namespace {

void write_header_and_rows(std::ofstream& out, const std::string& path, const std::string& len,
                           const std::vector<std::pair<std::string, complexd>>& rows) {
    if (!out)
        raise(Errc::InvalidArgument, "cannot open " + path + " for writing");
    out << "STATE " << len << "\n";
    for (const auto& [index, amp] : rows)
        out << index << ' ' << fmt_double(amp.real()) << ' ' << fmt_double(amp.imag()) << "\n";
    out.flush();
    if (!out)
        raise(Errc::InvalidArgument, "short write to " + path);
}

} // namespace

void store_state(const DenseState& state, const std::string& path) {
    std::vector<std::pair<std::string, complexd>> rows;
    for (std::size_t i = 0; i < state.len(); ++i)
        if (has_nonzero_bits(state.amps[i]))
            rows.emplace_back(std::to_string(i), state.amps[i]);
    std::ofstream out(path);
    write_header_and_rows(out, path, std::to_string(state.len()), rows);
}

void store_state(const SparseState& state, const std::string& path) {
    std::vector<std::pair<std::string, complexd>> rows;
    for (const auto& [index, amp] : state.entries())
        rows.emplace_back(index.get_str(), amp);
    std::ofstream out(path);
    write_header_and_rows(out, path, state.logical_len().get_str(), rows);
}

namespace {

struct ParsedStateFile {
    mpz_class logical_len;
    std::vector<std::pair<mpz_class, complexd>> rows; // strictly increasing indices
};

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& why) {
    raise(Errc::ParseError, "line " + std::to_string(line_no) + ": " + why);
}

double parse_double(const std::string& token, std::size_t line_no) {
    const char* begin = token.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end != begin + token.size())
        parse_fail(line_no, "malformed float '" + token + "'");
    if (!std::isfinite(v))
        parse_fail(line_no, "non-finite amplitude component '" + token + "'");
    return v;
}

bool is_decimal(const std::string& token) {
    if (token.empty())
        return false;
    for (char c : token)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

ParsedStateFile parse_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        raise(Errc::InvalidArgument, "cannot open " + path);

    ParsedStateFile parsed;
    std::string line;
    std::size_t line_no = 0;
    bool saw_header = false;

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string first;
        if (!(tokens >> first))
            continue; // blank line

        if (!saw_header) {
            std::string len_token, extra;
            if (first != "STATE" || !(tokens >> len_token) || (tokens >> extra))
                parse_fail(line_no, "expected header 'STATE <N>'");
            if (!is_decimal(len_token))
                parse_fail(line_no, "malformed length '" + len_token + "'");
            parsed.logical_len = mpz_class(len_token);
            if (parsed.logical_len < 1)
                parse_fail(line_no, "length must be at least 1");
            saw_header = true;
            continue;
        }

        std::string re_token, im_token, extra;
        if (!(tokens >> re_token >> im_token) || (tokens >> extra))
            parse_fail(line_no, "expected '<index> <re> <im>'");
        if (!is_decimal(first))
            parse_fail(line_no, "malformed index '" + first + "'");
        mpz_class index(first);
        if (index >= parsed.logical_len)
            raise(Errc::LengthMismatch, "line " + std::to_string(line_no) + ": index " +
                                            index.get_str() + " does not fit header length " +
                                            parsed.logical_len.get_str());
        if (!parsed.rows.empty() && index <= parsed.rows.back().first)
            parse_fail(line_no, "indices must be strictly increasing");
        complexd amp{parse_double(re_token, line_no), parse_double(im_token, line_no)};
        parsed.rows.emplace_back(std::move(index), amp);
    }
    if (!saw_header)
        parse_fail(line_no + 1, "missing 'STATE <N>' header");
    return parsed;
}

} // namespace

DenseState load_dense_state(const std::string& path, std::uint64_t cap) {
    ParsedStateFile parsed = parse_state_file(path);
    if (parsed.logical_len > cap)
        raise(Errc::CapacityExceeded, "state length " + parsed.logical_len.get_str() +
                                          " exceeds the dense amplitude cap " +
                                          std::to_string(cap));
    DenseState out = DenseState::zeros(parsed.logical_len.get_ui());
    for (const auto& [index, amp] : parsed.rows)
        out.amps[index.get_ui()] = amp;
    return out;
}

SparseState load_sparse_state(const std::string& path) {
    ParsedStateFile parsed = parse_state_file(path);
    SparseState::EntryMap m;
    for (auto& [index, amp] : parsed.rows)
        m.emplace(std::move(index), amp);
    return SparseState::from_entries(std::move(parsed.logical_len), std::move(m));
}

} // namespace emuq
