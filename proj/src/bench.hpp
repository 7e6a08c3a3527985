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

namespace emuq {

/// One timed run. `n` is the sweep variable: qubit count for dense ops,
/// precision bits for qpe-in-b, nonzero count for the sparse ops.
struct BenchRecord {
    std::string op;
    std::uint64_t n = 0;
    unsigned trial = 0;
    double seconds = 0.0;
};

/// Least-squares fit of the model y = c * 2^(k*n) in log2 space.
struct FitResult {
    double c = 0.0;
    double k = 0.0;
    double mse = 0.0; // mean squared error of log2(mean seconds)
};

struct BenchSweep {
    std::vector<BenchRecord> records;
    std::vector<std::uint64_t> skipped; // sizes that hit CapacityExceeded
};

/// Known operation names for the sweep harness.
const std::vector<std::string>& benchmark_ops();

/// Times `op` for each size and trial on seeded random inputs. Input
/// generation happens outside the timed window; sizes whose dense output
/// exceeds the amplitude cap are recorded as skipped, never fatal.
BenchSweep run_benchmark(const std::string& op, const std::vector<std::uint64_t>& sizes,
                         unsigned trials, std::uint64_t seed);

/// Fits log2(mean seconds per size) against n. Needs >= 3 distinct sizes.
FitResult fit_exponential(const std::vector<BenchRecord>& records);

/// CSV with header "op,n,trial,seconds"; floats carry 9 significant digits.
void write_csv(const std::vector<BenchRecord>& records, const std::string& path);

} // namespace emuq
