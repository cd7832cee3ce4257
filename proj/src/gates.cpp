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

#include "permuc/gates.hpp"

#include <cmath>

namespace permuc {

const char* basis_name(BasisGate g) {
    switch (g) {
        case BasisGate::CX: return "CX";
        case BasisGate::CZ: return "CZ";
        case BasisGate::SYC: return "SYC";
        case BasisGate::ISWAP: return "ISWAP";
    }
    return "?";
}

std::vector<int> gate_qubits(const Gate& g) {
    return std::visit(
        [](const auto& v) -> std::vector<int> {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, gate::Block>)
                return {v.block.pair.first, v.block.pair.second};
            else if constexpr (std::is_same_v<T, gate::Swap>)
                return {v.qubits.first, v.qubits.second};
            else if constexpr (std::is_same_v<T, gate::Single>)
                return {v.op.qubit};
            else if constexpr (std::is_same_v<T, gate::Basis>)
                return {v.qubits.first, v.qubits.second};
            else
                return {v.qubit};
        },
        g);
}

Mat2 rot_matrix(char axis, double angle) {
    const double h = angle / 2.0;
    return std::cos(h) * Mat2::Identity() - cplx(0, std::sin(h)) * pauli_matrix(axis);
}

Mat4 basis_matrix(BasisGate g) {
    Mat4 m = Mat4::Zero();
    const cplx i{0, 1};
    switch (g) {
        case BasisGate::CX:
            // control on tensor slot 0
            m(0, 0) = 1;
            m(3, 1) = 1;
            m(2, 2) = 1;
            m(1, 3) = 1;
            break;
        case BasisGate::CZ:
            m(0, 0) = m(1, 1) = m(2, 2) = 1;
            m(3, 3) = -1;
            break;
        case BasisGate::SYC:
            m(0, 0) = 1;
            m(2, 1) = -i;
            m(1, 2) = -i;
            m(3, 3) = std::exp(cplx(0, -kPi / 6.0));
            break;
        case BasisGate::ISWAP:
            m(0, 0) = 1;
            m(2, 1) = i;
            m(1, 2) = i;
            m(3, 3) = 1;
            break;
    }
    return m;
}

}  // namespace permuc
