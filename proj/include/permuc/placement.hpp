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
#include "permuc/topology.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace permuc {

/// Symmetric interaction-count matrix: f[i][j] = number of two-qubit blocks
/// on pair {i, j}.
class FlowMatrix {
public:
    explicit FlowMatrix(int n) : n_(n), f_(static_cast<std::size_t>(n) * n, 0) {}

    int n() const { return n_; }
    int at(int i, int j) const { return f_[static_cast<std::size_t>(i) * n_ + j]; }
    void add(int i, int j, int count = 1) {
        if (i == j) throw input_error("flow matrix has zero diagonal");
        f_[static_cast<std::size_t>(i) * n_ + j] += count;
        f_[static_cast<std::size_t>(j) * n_ + i] += count;
    }
    int total() const;  // sum over i < j

private:
    int n_;
    std::vector<int> f_;
};

FlowMatrix flow_matrix(const std::vector<TwoQubitBlock>& blocks, int n);

/// Symmetric double-sum QAP objective: sum_{i,j} f[i][j] * d(phi(i), phi(j))
/// = 2 * sum_{i<j} f[i][j] * d(phi(i), phi(j)).
long qap_cost(const QubitMap& map, const FlowMatrix& f, const DeviceTopology& topo);

struct TabuParams {
    int max_iters = 0;  // 0 means the default 100 * n
    int tenure = 0;     // 0 means the default n
    std::uint64_t seed = 0;
    int restarts = 5;
    std::optional<int> time_budget_ms;
};

/// Tabu-search placement for the QAP objective. Neighborhood: all pairwise
/// exchanges of placed logical qubits plus relocations onto unused physical
/// qubits. Deterministic for a fixed seed. Throws input_error if the device
/// is smaller than the circuit.
std::pair<QubitMap, long> tabu_place(const FlowMatrix& f, const DeviceTopology& topo,
                                     const TabuParams& params);

}  // namespace permuc
