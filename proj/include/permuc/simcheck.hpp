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

#include "permuc/gates.hpp"
#include "permuc/synth.hpp"

#include <string>
#include <vector>

namespace permuc {

/// Dense 2^n x 2^n unitary of a gate list in execution order, little-endian
/// (qubit 0 is the least significant bit). Memory is O(4^n) complex doubles;
/// n above the cap is rejected.
MatX circuit_unitary(const Circuit& c, int n, int cap = 12);

/// In-place left-multiplication helpers used by the oracle.
void apply_one_qubit(MatX& m, const Mat2& g, int wire);
void apply_two_qubit(MatX& m, const Mat4& g, int wire_slot0, int wire_slot1);

struct VerifyReport {
    bool ok = false;
    double max_dev = 0.0;
    double max_dev_alt = 0.0;  // second anchor entry, for invariance
    std::vector<int> emitted_order;  // block ids in emission order
    int sim_width = 0;
    std::string problem;
};

/// Proves the compiled schedule implements a valid permutation of the
/// Hamiltonian's operator exponentials: the fully synthesized circuit,
/// composed with the permutation of final_map o initial_map^-1, must match
/// the product of the unified operators taken in the emitted order, to
/// 1e-9 after global-phase alignment, with every operator appearing exactly
/// once.
VerifyReport verify_permutation_equivalence(const ScheduledCircuit& sc, const Hamiltonian& h,
                                            int cap = 12);

/// Multi-layer check: per-layer permutation equivalence plus the composed
/// qubit permutation (identity over any even number of layers).
bool verify_multilayer(const std::vector<ScheduledCircuit>& layers, const Hamiltonian& h,
                       int cap = 12);

}  // namespace permuc
