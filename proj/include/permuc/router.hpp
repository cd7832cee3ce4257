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
#include "permuc/rng.hpp"
#include "permuc/topology.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace permuc {

/// A SWAP inserted between two consecutive qubit maps. The physical edge is
/// fixed; the logical contents are recorded at insertion time. When the
/// unifier merges a co-located circuit block, dressed is set and matrix
/// becomes SWAP * block (block applied first), in logical (lo, hi) order.
struct TransitionSwap {
    std::pair<int, int> phys;     // device edge, normalized a < b
    std::pair<int, int> logical;  // contents of (a, b); -1 marks an empty slot
    bool dressable = false;
    bool dressed = false;
    int merged_block = -1;
    Mat4 matrix;
};

/// Candidate vector for the three selection criteria, lexicographic order:
/// smaller remaining_cost, then earlier start_cycle, then dressable first.
struct SwapCandidate {
    std::pair<int, int> edge;
    long remaining_cost = 0;
    int start_cycle = 0;
    bool dressable = false;
};

/// Output of the routing pass: the map sequence, the blocks that are
/// nearest-neighbor under each map, and the transition SWAPs between them.
struct RoutedProgram {
    int n = 0;
    std::vector<QubitMap> maps;               // phi_0 ... phi_k
    std::vector<std::vector<int>> gate_sets;  // block ids per map
    std::vector<TransitionSwap> swaps;        // size maps.size() - 1
    int swaps_inserted = 0;
    int swaps_dressed = 0;

    const QubitMap& initial_map() const { return maps.front(); }
    const QubitMap& final_map() const { return maps.back(); }
};

/// Trace of one SWAP decision, for --trace output and tests.
struct RouteTraceEntry {
    int block_id = 0;  // the shortest-distance unrouted block driving the step
    std::vector<SwapCandidate> candidates;
    std::pair<int, int> chosen;
};

/// All device edges incident to either physical endpoint of the block.
std::vector<std::pair<int, int>> candidate_swaps(const TwoQubitBlock& block,
                                                 const QubitMap& map,
                                                 const DeviceTopology& topo);

/// Strict lexicographic filter over the three criteria; remaining ties are
/// broken by a seeded uniform choice. Returns the index of the winner.
std::size_t select_swap(const std::vector<SwapCandidate>& candidates, Rng& rng);

/// Permutation-aware SWAP insertion. Repeatedly routes the unrouted block
/// with the smallest current physical distance (ties by input order) until
/// every block is nearest-neighbor in some map. Deterministic per seed.
RoutedProgram route(const std::vector<TwoQubitBlock>& blocks, const QubitMap& phi0,
                    const DeviceTopology& topo, std::uint64_t seed,
                    std::vector<RouteTraceEntry>* trace = nullptr);

}  // namespace permuc
