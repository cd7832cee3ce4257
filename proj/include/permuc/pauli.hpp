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

#include "permuc/types.hpp"

#include <string>
#include <utility>
#include <vector>

namespace permuc {

/// A weighted Pauli string on one or two qubits. The coefficient multiplies
/// the Pauli operator inside the exponent exp(i * t * coeff * P).
struct PauliTerm {
    std::string paulis;       // over {X, Y, Z}, length 1 or 2
    std::vector<int> qubits;  // distinct logical indices, same length
    double coeff = 0.0;
};

/// A 2-local Hamiltonian: sum of one- and two-qubit terms, plus the
/// evolution time per step and the number of repeated steps.
struct Hamiltonian {
    int n = 0;
    std::vector<PauliTerm> terms;
    double time = 1.0;
    int steps = 1;

    /// Distinct unordered interacting pairs, in first-appearance order.
    std::vector<std::pair<int, int>> interaction_edges() const;
};

/// Validates terms against n and returns the assembled Hamiltonian.
/// Throws input_error on out-of-range indices, duplicate qubits within a
/// term, or Pauli characters outside {X, Y, Z}.
Hamiltonian build_hamiltonian(int n, std::vector<PauliTerm> terms, double time,
                              int steps);

}  // namespace permuc
