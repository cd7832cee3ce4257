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

#include "permuc/router.hpp"
#include "permuc/unifier.hpp"

#include <optional>
#include <vector>

namespace permuc {

/// One scheduled two-qubit gate. Blocks reference the unified block list;
/// swaps reference the routed program's transition SWAPs (plain or dressed).
/// wires.first carries the tensor slot of the smaller logical index.
struct SchedGate {
    bool is_swap = false;
    int id = 0;
    std::pair<int, int> logical{-1, -1};
    std::pair<int, int> wires{0, 0};
};

/// Cycle-assigned circuit. Every cycle holds a set of disjoint-wire gates;
/// cycle_maps[t] is the map active while cycle t executes, and swaps update
/// it for the next cycle. Single-qubit ops are placed separately and do not
/// count toward the block depth.
struct ScheduledCircuit {
    int n = 0;
    int m = 0;
    std::vector<std::vector<SchedGate>> cycles;
    std::vector<QubitMap> cycle_maps;
    QubitMap initial_map;
    QubitMap final_map;
    std::vector<TransitionSwap> swaps;  // indexed by SchedGate::id for swaps
    std::vector<SingleQubitOp> singles;
    std::vector<int> single_cycle;  // may be >= cycles.size()
    std::vector<int> single_wire;

    int depth_blocks() const { return static_cast<int>(cycles.size()); }
    int total_depth_cycles() const;
    int swaps_inserted() const { return static_cast<int>(swaps.size()); }
    int swaps_dressed() const;

    /// Two-qubit gates flattened in execution order.
    std::vector<SchedGate> gates_in_order() const;
};

/// Scheduling without topology constraints: greedy largest-degree-first
/// coloring of the block conflict graph (blocks sharing a qubit conflict).
ScheduledCircuit color_schedule(const std::vector<TwoQubitBlock>& blocks,
                                const std::vector<SingleQubitOp>& singles,
                                const QubitMap& map);

/// Order-respecting scheduler: ASAP levelization of the routed sequence,
/// with any two gates sharing a physical wire keeping their routed order.
/// This is the generic baseline the hybrid scheduler is compared against.
ScheduledCircuit generic_schedule(const RoutedProgram& rp,
                                  const std::vector<TwoQubitBlock>& blocks,
                                  const std::vector<SingleQubitOp>& singles,
                                  const DeviceTopology& topo);

/// Hybrid permutation-aware ALAP scheduler: colors the gates of the initial
/// map, places the rest in a reverse-time sweep from the last map (SWAPs
/// rewind the map and wait for the blocks that depend on them), reverses,
/// and compacts blocks to their earliest valid cycle.
ScheduledCircuit hybrid_alap(const RoutedProgram& rp,
                             const std::vector<TwoQubitBlock>& blocks,
                             const std::vector<SingleQubitOp>& singles,
                             const DeviceTopology& topo);

/// Forward replay: from the initial map, every gate must sit on a device
/// edge holding exactly its logical operands, with disjoint wires inside
/// each cycle. Throws internal_error with a description on violation.
void validate_schedule(const ScheduledCircuit& sc, const std::vector<TwoQubitBlock>& blocks,
                       const DeviceTopology& topo);

}  // namespace permuc
