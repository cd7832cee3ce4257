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

#include <string>
#include <utility>
#include <vector>

namespace permuc {

/// Undirected hardware connectivity graph with all-pairs hop distances.
class DeviceTopology {
public:
    /// Builds the topology and its distance matrix. Requires a connected
    /// graph; throws input_error naming the components otherwise.
    DeviceTopology(int m, std::vector<std::pair<int, int>> edges);

    int m() const { return m_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int dist(int a, int b) const { return dist_[static_cast<std::size_t>(a) * m_ + b]; }
    bool adjacent(int a, int b) const { return a != b && dist(a, b) == 1; }
    const std::vector<int>& neighbors(int a) const { return adj_[a]; }
    int diameter() const;

private:
    int m_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> dist_;  // row-major m x m
};

/// Exact unweighted shortest-path hop counts via Floyd-Warshall, row-major.
/// Throws input_error listing the connected components if the graph is
/// disconnected.
std::vector<int> all_pairs_distances(const std::vector<std::pair<int, int>>& edges, int m);

DeviceTopology make_grid(int rows, int cols);
DeviceTopology make_line(int n);
DeviceTopology make_all_to_all(int n);

/// Resolves "sycamore54", "montreal27", "aspen16", "grid:RxC", "line:N",
/// "all2all:N". The three device presets load their edge lists from the
/// repository data files (override the directory with PERMUC_DATA_DIR).
DeviceTopology preset(const std::string& name);

}  // namespace permuc
