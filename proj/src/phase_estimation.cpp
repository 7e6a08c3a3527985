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

#include "phase_estimation.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "fft.hpp"

namespace emuq {

namespace {

constexpr double kEigenTol = 1e-8;

} // namespace

UnitaryMatrix::UnitaryMatrix(std::size_t m, std::vector<complexd> e)
    : dim(m), entries(std::move(e)) {
    if (!is_power_of_two(dim))
        raise(Errc::InvalidArgument, "unitary dimension must be a power of two");
    if (entries.size() != dim * dim)
        raise(Errc::InvalidArgument, "unitary entry count does not match dimension");
}

UnitaryMatrix UnitaryMatrix::identity(std::size_t m) {
    UnitaryMatrix u(m, std::vector<complexd>(m * m));
    for (std::size_t i = 0; i < m; ++i)
        u.at(i, i) = 1.0;
    return u;
}

UnitaryMatrix UnitaryMatrix::diagonal_phase(double angle) {
    UnitaryMatrix u = identity(2);
    u.at(1, 1) = std::polar(1.0, angle);
    return u;
}

void check_unitary(const UnitaryMatrix& u, double tol) {
    const std::size_t m = u.dim;
    double worst = 0.0;
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < m; ++c) {
            complexd dot{0.0, 0.0};
            for (std::size_t k = 0; k < m; ++k)
                dot += std::conj(u.at(k, r)) * u.at(k, c);
            if (r == c)
                dot -= 1.0;
            worst = std::max(worst, std::abs(dot));
        }
    }
    if (!(worst <= tol))
        raise(Errc::NotUnitary,
              "max |U^dag U - I| = " + std::to_string(worst) + " exceeds " + std::to_string(tol));
}

complexd eigenvalue_for_vector(const UnitaryMatrix& u, const DenseState& phi) {
    check_unitary(u);
    if (phi.len() != u.dim)
        raise(Errc::InvalidArgument, "eigenvector length " + std::to_string(phi.len()) +
                                         " does not match unitary dimension " +
                                         std::to_string(u.dim));
    if (!phi.is_normalized())
        raise(Errc::NotNormalized, "eigenvector must be normalized");

    std::vector<complexd> u_phi(u.dim);
    for (std::size_t r = 0; r < u.dim; ++r) {
        complexd acc{0.0, 0.0};
        for (std::size_t c = 0; c < u.dim; ++c)
            acc += u.at(r, c) * phi.amps[c];
        u_phi[r] = acc;
    }

    complexd z{0.0, 0.0};
    for (std::size_t r = 0; r < u.dim; ++r)
        z += std::conj(phi.amps[r]) * u_phi[r];

    double residual = 0.0;
    for (std::size_t r = 0; r < u.dim; ++r)
        residual = std::max(residual, std::abs(u_phi[r] - z * phi.amps[r]));
    if (!(residual <= kEigenTol))
        raise(Errc::NotAnEigenvector,
              "residual max|U phi - z phi| = " + std::to_string(residual));
    if (std::abs(std::abs(z) - 1.0) > kEigenTol)
        raise(Errc::NotAnEigenvector, "candidate eigenvalue is off the unit circle");
    return z;
}

PhaseEstimate estimate_phase(const UnitaryMatrix& u, const DenseState& phi, int bits) {
    if (bits < 1 || bits > 62)
        raise(Errc::InvalidArgument, "precision must be between 1 and 62 bits");
    const complexd z = eigenvalue_for_vector(u, phi);

    // arg() lands in (-pi, pi]; fold into phase turns theta in [0, 1).
    double theta = std::arg(z) / (2.0 * std::numbers::pi);
    if (theta < 0.0)
        theta += 1.0;
    if (theta >= 1.0)
        theta = 0.0;

    // Nearest of the 2^b roots of unity, wrapping theta ~ 1 back to index 0.
    // long double keeps the product exact out to b = 62.
    const long double scaled = static_cast<long double>(theta) * std::exp2l(bits);
    const auto rounded = static_cast<std::uint64_t>(std::roundl(scaled));
    const std::uint64_t index = rounded & ((std::uint64_t{1} << bits) - 1);
    return PhaseEstimate{bits, index, theta};
}

SparseState qpe(const UnitaryMatrix& u, const DenseState& phi, int bits) {
    const PhaseEstimate est = estimate_phase(u, phi, bits);
    mpz_class len = mpz_class(1) << bits;
    return SparseState::basis(std::move(len), mpz_class(static_cast<unsigned long>(est.index)));
}

namespace {

std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& why) {
    raise(Errc::ParseError, "line " + std::to_string(line_no) + ": " + why);
}

double parse_component(const std::string& token, std::size_t line_no) {
    const char* begin = token.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end != begin + token.size() || !std::isfinite(v))
        parse_fail(line_no, "malformed matrix entry component '" + token + "'");
    return v;
}

} // namespace

void store_unitary(const UnitaryMatrix& u, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        raise(Errc::InvalidArgument, "cannot open " + path + " for writing");
    out << "UNITARY " << u.dim << "\n";
    for (std::size_t r = 0; r < u.dim; ++r) {
        for (std::size_t c = 0; c < u.dim; ++c) {
            if (c)
                out << ' ';
            out << fmt_double(u.at(r, c).real()) << ',' << fmt_double(u.at(r, c).imag());
        }
        out << "\n";
    }
    out.flush();
    if (!out)
        raise(Errc::InvalidArgument, "short write to " + path);
}

UnitaryMatrix load_unitary(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        raise(Errc::InvalidArgument, "cannot open " + path);

    std::string line;
    std::size_t line_no = 0;

    // header
    std::size_t dim = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string first;
        if (!(tokens >> first))
            continue;
        std::string dim_token, extra;
        if (first != "UNITARY" || !(tokens >> dim_token) || (tokens >> extra))
            parse_fail(line_no, "expected header 'UNITARY <M>'");
        try {
            dim = std::stoull(dim_token);
        } catch (const std::exception&) {
            parse_fail(line_no, "malformed dimension '" + dim_token + "'");
        }
        break;
    }
    if (dim == 0)
        parse_fail(line_no + 1, "missing 'UNITARY <M>' header");

    std::vector<complexd> entries;
    entries.reserve(dim * dim);
    std::size_t rows = 0;
    while (rows < dim && std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string pair;
        std::size_t cols = 0;
        while (tokens >> pair) {
            auto comma = pair.find(',');
            if (comma == std::string::npos)
                parse_fail(line_no, "expected 're,im' pair, got '" + pair + "'");
            double re = parse_component(pair.substr(0, comma), line_no);
            double im = parse_component(pair.substr(comma + 1), line_no);
            entries.emplace_back(re, im);
            ++cols;
        }
        if (cols == 0)
            continue; // blank line
        if (cols != dim)
            raise(Errc::LengthMismatch, "line " + std::to_string(line_no) + ": row has " +
                                            std::to_string(cols) + " entries, expected " +
                                            std::to_string(dim));
        ++rows;
    }
    if (rows != dim)
        raise(Errc::LengthMismatch, "matrix has " + std::to_string(rows) + " rows, header says " +
                                        std::to_string(dim));
    return UnitaryMatrix(dim, std::move(entries));
}

} // namespace emuq
