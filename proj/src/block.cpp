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

#include "permuc/block.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <map>

namespace permuc {

Mat2 pauli_matrix(char p) {
    Mat2 m;
    const cplx i{0.0, 1.0};
    switch (p) {
        case 'X': m << 0, 1, 1, 0; break;
        case 'Y': m << 0, -i, i, 0; break;
        case 'Z': m << 1, 0, 0, -1; break;
        default: throw input_error(std::string("unknown Pauli '") + p + "'");
    }
    return m;
}

Mat4 two_qubit_pauli(const PauliTerm& term) {
    if (term.qubits.size() != 2) throw input_error("two_qubit_pauli needs a 2-qubit term");
    const bool ordered = term.qubits[0] < term.qubits[1];
    const Mat2 on_lo = pauli_matrix(ordered ? term.paulis[0] : term.paulis[1]);
    const Mat2 on_hi = pauli_matrix(ordered ? term.paulis[1] : term.paulis[0]);
    // little-endian: high tensor factor first
    return Eigen::kroneckerProduct(on_hi, on_lo);
}

Mat2 single_exponential(char p, double theta) {
    return std::cos(theta) * Mat2::Identity() +
           cplx{0.0, std::sin(theta)} * pauli_matrix(p);
}

Mat4 swap_matrix() {
    Mat4 s = Mat4::Zero();
    s(0, 0) = 1;
    s(1, 2) = 1;
    s(2, 1) = 1;
    s(3, 3) = 1;
    return s;
}

Mat4 block_matrix(const std::vector<PauliTerm>& terms, double t) {
    Mat4 u = Mat4::Identity();
    std::pair<int, int> pair{-1, -1};
    for (const auto& term : terms) {
        if (term.qubits.size() != 2) throw input_error("block_matrix: all terms must be 2-qubit");
        const std::pair<int, int> e = std::minmax(term.qubits[0], term.qubits[1]);
        if (pair.first < 0)
            pair = e;
        else if (e != pair)
            throw input_error("block_matrix: terms act on differing pairs");
        const double theta = t * term.coeff;
        const Mat4 p = two_qubit_pauli(term);
        // P*P = I, so exp(i theta P) = cos(theta) I + i sin(theta) P
        const Mat4 factor =
            std::cos(theta) * Mat4::Identity() + cplx{0.0, std::sin(theta)} * p;
        u = factor * u;  // term order: earlier terms applied first
    }
    return u;
}

std::pair<std::vector<TwoQubitBlock>, std::vector<SingleQubitOp>>
unify_terms(const Hamiltonian& h) {
    std::vector<TwoQubitBlock> blocks;
    std::vector<SingleQubitOp> singles;
    std::map<std::pair<int, int>, std::size_t> index_of;
    for (const auto& term : h.terms) {
        if (term.qubits.size() == 1) {
            singles.push_back(
                {term.qubits[0], single_exponential(term.paulis[0], h.time * term.coeff)});
            continue;
        }
        const std::pair<int, int> pair = std::minmax(term.qubits[0], term.qubits[1]);
        auto [it, inserted] = index_of.try_emplace(pair, blocks.size());
        if (inserted) blocks.push_back({pair, {}, h.time, false, Mat4::Identity()});
        blocks[it->second].terms.push_back(term);
    }
    for (auto& b : blocks) b.matrix = block_matrix(b.terms, h.time);
    return {std::move(blocks), std::move(singles)};
}

}  // namespace permuc
