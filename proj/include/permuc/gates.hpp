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

#include "permuc/block.hpp"
#include "permuc/qubit_map.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace permuc {

enum class BasisGate { CX, CZ, SYC, ISWAP };

const char* basis_name(BasisGate g);

namespace gate {

struct Block {
    TwoQubitBlock block;
};
struct Swap {
    std::pair<int, int> qubits;
};
struct Single {
    SingleQubitOp op;
};
struct Basis {
    BasisGate name;
    std::pair<int, int> qubits;  // (control, target) for CX
};
struct Rot {
    char axis;  // 'X', 'Y' or 'Z'; matrix exp(-i * angle * P / 2)
    double angle;
    int qubit;
};

}  // namespace gate

using Gate = std::variant<gate::Block, gate::Swap, gate::Single, gate::Basis, gate::Rot>;

/// Qubits named by a gate, one or two entries.
std::vector<int> gate_qubits(const Gate& g);

struct Circuit {
    int n = 0;
    std::vector<Gate> gates;
    std::optional<QubitMap> initial_map;
    std::optional<QubitMap> final_map;
};

/// Matrix of a rotation gate, exp(-i * angle * P / 2).
Mat2 rot_matrix(char axis, double angle);

/// 4x4 matrix of a basis gate in (slot0, slot1) order; for CX, slot0 is the
/// control and slot1 the target.
Mat4 basis_matrix(BasisGate g);

}  // namespace permuc
