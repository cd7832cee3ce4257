// Copyright 2026 The permuc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "permuc/pauli.hpp"
#include "permuc/types.hpp"

#include <utility>
#include <vector>

namespace permuc {

// Qubit index convention is little-endian throughout: in a two-qubit matrix
// on the normalized pair (lo, hi) with lo < hi, basis index = bit(lo) +
// 2 * bit(hi). Single Pauli matrices:
Mat2 pauli_matrix(char p);

/// 4x4 matrix of a two-qubit Pauli string in (lo, hi) tensor order.
Mat4 two_qubit_pauli(const PauliTerm& term);

/// exp(i * theta * P) for a single-qubit Pauli P.
Mat2 single_exponential(char p, double theta);

/// The 4x4 exchange unitary.
Mat4 swap_matrix();

/// A unified unitary on one qubit pair: the product of all co-located term
/// exponentials, optionally dressed with a SWAP by the unifier pass.
struct TwoQubitBlock {
    std::pair<int, int> pair;      // normalized (lo, hi), lo < hi
    std::vector<PauliTerm> terms;  // the terms acting exactly on this pair
    double angle_scale = 1.0;      // evolution time t
    bool dressed = false;
    Mat4 matrix;  // cached; (optionally SWAP *) product of exp(i t c_k P_k)
};

struct SingleQubitOp {
    int qubit = 0;
    Mat2 matrix;
};

/// Ordered product of exp(i * t * coeff_k * P_k) over the given same-pair
/// terms, first term applied first (i.e. rightmost in the matrix product).
/// Computed analytically: exp(i theta P) = cos(theta) I + i sin(theta) P.
/// Throws input_error if the terms do not all act on one pair.
Mat4 block_matrix(const std::vector<PauliTerm>& terms, double t);

/// Circuit unitary unifying: one TwoQubitBlock per distinct interacting
/// pair (in first-appearance order), single-qubit terms returned separately.
std::pair<std::vector<TwoQubitBlock>, std::vector<SingleQubitOp>>
unify_terms(const Hamiltonian& h);

}  // namespace permuc
