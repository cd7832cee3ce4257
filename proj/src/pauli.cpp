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

#include "permuc/pauli.hpp"

#include <cmath>
#include <set>

namespace permuc {

std::vector<std::pair<int, int>> Hamiltonian::interaction_edges() const {
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    for (const auto& t : terms) {
        if (t.qubits.size() != 2) continue;
        const std::pair<int, int> e = std::minmax(t.qubits[0], t.qubits[1]);
        if (seen.insert(e).second) edges.push_back(e);
    }
    return edges;
}

Hamiltonian build_hamiltonian(int n, std::vector<PauliTerm> terms, double time,
                              int steps) {
    if (n < 2) throw input_error("Hamiltonian needs n >= 2 qubits, got " + std::to_string(n));
    if (steps < 1) throw input_error("step count must be >= 1");
    if (!std::isfinite(time)) throw input_error("evolution time must be finite");
    for (const auto& t : terms) {
        if (t.paulis.size() != 1 && t.paulis.size() != 2)
            throw input_error("Pauli string must have length 1 or 2, got \"" + t.paulis + "\"");
        if (t.paulis.size() != t.qubits.size())
            throw input_error("Pauli string \"" + t.paulis + "\" does not match its qubit count");
        for (char c : t.paulis)
            if (c != 'X' && c != 'Y' && c != 'Z')
                throw input_error(std::string("Pauli character outside {X,Y,Z}: '") + c + "'");
        for (int q : t.qubits)
            if (q < 0 || q >= n)
                throw input_error("qubit index " + std::to_string(q) + " out of range for n = " +
                                  std::to_string(n));
        if (t.qubits.size() == 2 && t.qubits[0] == t.qubits[1])
            throw input_error("duplicate qubit " + std::to_string(t.qubits[0]) + " within a term");
        if (!std::isfinite(t.coeff)) throw input_error("term coefficient must be finite");
    }
    return Hamiltonian{n, std::move(terms), time, steps};
}

}  // namespace permuc
