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

#include "state.hpp"

namespace emuq {

// Emulated arithmetic on superpositions of integers. Each operation pairs
// every index of one operand with every index of the other, accumulates the
// amplitude product at the combined index, and normalizes once at the end:
//
//   add:           out[i + j] += a_i * b_j     output length 2 * max(Na, Nb)
//   multiply:      out[i * j] += a_i * b_j     output length Na * Nb
//   exponentiate:  out[i ^ j] += a_i * b_j     output length Na ^ Nb
//
// Index exponentiation uses the 0^0 = 1 convention. Inputs must be
// normalized; dense outputs beyond the amplitude cap fail with
// CapacityExceeded (the sparse backend is the escape hatch), and a raw
// accumulation that cancels to zero fails with ZeroVector.

DenseState add(const DenseState& a, const DenseState& b, std::uint64_t cap = dense_cap());
DenseState multiply(const DenseState& a, const DenseState& b, std::uint64_t cap = dense_cap());
DenseState exponentiate(const DenseState& a, const DenseState& b,
                        std::uint64_t cap = dense_cap());

SparseState add(const SparseState& a, const SparseState& b);
SparseState multiply(const SparseState& a, const SparseState& b);
SparseState exponentiate(const SparseState& a, const SparseState& b);

} // namespace emuq
