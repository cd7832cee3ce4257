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

#include "permuc/scheduler.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace permuc {

int ScheduledCircuit::total_depth_cycles() const {
    int d = static_cast<int>(cycles.size());
    for (int c : single_cycle) d = std::max(d, c + 1);
    return d;
}

int ScheduledCircuit::swaps_dressed() const {
    int k = 0;
    for (const auto& s : swaps) k += s.dressed ? 1 : 0;
    return k;
}

std::vector<SchedGate> ScheduledCircuit::gates_in_order() const {
    std::vector<SchedGate> out;
    for (const auto& cyc : cycles) out.insert(out.end(), cyc.begin(), cyc.end());
    return out;
}

namespace {

SchedGate make_block_gate(int id, const TwoQubitBlock& b, const QubitMap& map) {
    SchedGate g;
    g.is_swap = false;
    g.id = id;
    g.logical = b.pair;
    g.wires = {map.phys(b.pair.first), map.phys(b.pair.second)};
    return g;
}

SchedGate make_swap_gate(int idx, const TransitionSwap& ts) {
    SchedGate g;
    g.is_swap = true;
    g.id = idx;
    g.logical = ts.logical;
    // slot order follows the logical (lo, hi) pair when both slots are
    // occupied; a bare SWAP is symmetric so the order is immaterial then
    if (ts.logical.first >= 0 && ts.logical.second >= 0 &&
        ts.logical.first > ts.logical.second) {
        g.logical = {ts.logical.second, ts.logical.first};
        g.wires = {ts.phys.second, ts.phys.first};
    } else {
        g.wires = ts.phys;
    }
    return g;
}

/// Greedy largest-degree-first coloring of the conflict graph; returns the
/// color per block id (conflict = sharing a logical qubit).
std::vector<int> color_blocks(const std::vector<TwoQubitBlock>& blocks,
                              const std::vector<int>& ids) {
    const int k = static_cast<int>(ids.size());
    std::vector<std::vector<int>> conflicts(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const auto& a = blocks[ids[i]].pair;
            const auto& b = blocks[ids[j]].pair;
            if (a.first == b.first || a.first == b.second || a.second == b.first ||
                a.second == b.second) {
                conflicts[i].push_back(j);
                conflicts[j].push_back(i);
            }
        }
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return conflicts[a].size() > conflicts[b].size();
    });
    std::vector<int> color(k, -1);
    for (int i : order) {
        std::set<int> used;
        for (int j : conflicts[i])
            if (color[j] >= 0) used.insert(color[j]);
        int c = 0;
        while (used.count(c)) ++c;
        color[i] = c;
    }
    return color;
}

void place_singles(ScheduledCircuit& sc) {
    const int ncyc = static_cast<int>(sc.cycles.size());
    // occupancy per existing cycle
    std::vector<std::set<int>> busy(ncyc);
    for (int t = 0; t < ncyc; ++t)
        for (const auto& g : sc.cycles[t]) {
            busy[t].insert(g.wires.first);
            busy[t].insert(g.wires.second);
        }
    std::vector<std::set<int>> extra;  // appended single-only cycles
    sc.single_cycle.assign(sc.singles.size(), 0);
    sc.single_wire.assign(sc.singles.size(), 0);
    for (std::size_t i = 0; i < sc.singles.size(); ++i) {
        const int q = sc.singles[i].qubit;
        int placed = -1;
        for (int t = 0; t < ncyc; ++t) {
            const int wire = sc.cycle_maps[t].phys(q);
            if (!busy[t].count(wire)) {
                busy[t].insert(wire);
                sc.single_cycle[i] = t;
                sc.single_wire[i] = wire;
                placed = t;
                break;
            }
        }
        if (placed >= 0) continue;
        const int wire = sc.final_map.phys(q);
        int t = 0;
        while (t < static_cast<int>(extra.size()) && extra[t].count(wire)) ++t;
        if (t == static_cast<int>(extra.size())) extra.emplace_back();
        extra[t].insert(wire);
        sc.single_cycle[i] = ncyc + t;
        sc.single_wire[i] = wire;
    }
}

void derive_cycle_maps(ScheduledCircuit& sc) {
    sc.cycle_maps.clear();
    QubitMap m = sc.initial_map;
    for (const auto& cyc : sc.cycles) {
        sc.cycle_maps.push_back(m);
        for (const auto& g : cyc)
            if (g.is_swap) m.apply_physical_swap(sc.swaps[g.id].phys.first,
                                                 sc.swaps[g.id].phys.second);
    }
    sc.final_map = m;
}

/// Slides blocks (never SWAPs, which pin the map sequence) to the earliest
/// cycle where their logical pair is adjacent and the wires are free.
void compact_blocks(ScheduledCircuit& sc, const DeviceTopology& topo) {
    bool moved = true;
    while (moved) {
        moved = false;
        derive_cycle_maps(sc);
        for (std::size_t t = 1; t < sc.cycles.size(); ++t) {
            for (std::size_t gi = 0; gi < sc.cycles[t].size();) {
                SchedGate g = sc.cycles[t][gi];
                if (g.is_swap) {
                    ++gi;
                    continue;
                }
                int dest = -1;
                std::pair<int, int> dest_wires;
                for (std::size_t s = 0; s < t; ++s) {
                    const auto& map = sc.cycle_maps[s];
                    const int wa = map.phys(g.logical.first);
                    const int wb = map.phys(g.logical.second);
                    if (!topo.adjacent(wa, wb)) continue;
                    bool free = true;
                    for (const auto& other : sc.cycles[s])
                        if (other.wires.first == wa || other.wires.second == wa ||
                            other.wires.first == wb || other.wires.second == wb) {
                            free = false;
                            break;
                        }
                    if (free) {
                        dest = static_cast<int>(s);
                        dest_wires = {wa, wb};
                        break;
                    }
                }
                if (dest >= 0) {
                    g.wires = dest_wires;
                    sc.cycles[dest].push_back(g);
                    sc.cycles[t].erase(sc.cycles[t].begin() + gi);
                    moved = true;
                } else {
                    ++gi;
                }
            }
        }
        // drop block-only cycles that emptied out
        for (std::size_t t = sc.cycles.size(); t-- > 0;)
            if (sc.cycles[t].empty()) sc.cycles.erase(sc.cycles.begin() + t);
    }
    derive_cycle_maps(sc);
    // deterministic within-cycle order: blocks by id, then swaps by id
    for (auto& cyc : sc.cycles)
        std::sort(cyc.begin(), cyc.end(), [](const SchedGate& a, const SchedGate& b) {
            if (a.is_swap != b.is_swap) return !a.is_swap;
            return a.id < b.id;
        });
}

}  // namespace

ScheduledCircuit color_schedule(const std::vector<TwoQubitBlock>& blocks,
                                const std::vector<SingleQubitOp>& singles,
                                const QubitMap& map) {
    ScheduledCircuit sc;
    sc.n = map.n();
    sc.m = map.m();
    sc.initial_map = map;
    sc.final_map = map;
    sc.singles = singles;

    std::vector<int> ids(blocks.size());
    std::iota(ids.begin(), ids.end(), 0);
    const auto color = color_blocks(blocks, ids);
    const int ncolors = color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
    sc.cycles.assign(ncolors, {});
    for (std::size_t i = 0; i < ids.size(); ++i)
        sc.cycles[color[i]].push_back(make_block_gate(ids[i], blocks[ids[i]], map));
    for (auto& cyc : sc.cycles)
        std::sort(cyc.begin(), cyc.end(),
                  [](const SchedGate& a, const SchedGate& b) { return a.id < b.id; });
    sc.cycle_maps.assign(sc.cycles.size(), map);
    place_singles(sc);
    return sc;
}

namespace {

ScheduledCircuit generic_cycles(const RoutedProgram& rp,
                                const std::vector<TwoQubitBlock>& blocks,
                                const DeviceTopology& topo) {
    ScheduledCircuit sc;
    sc.n = rp.n;
    sc.m = topo.m();
    sc.initial_map = rp.initial_map();
    sc.swaps = rp.swaps;

    // Linearize the routed circuit, then levelize: a gate lands one level
    // after the latest earlier gate it shares a physical wire with.
    std::vector<SchedGate> seq;
    for (std::size_t i = 0; i < rp.gate_sets.size(); ++i) {
        for (int id : rp.gate_sets[i])
            seq.push_back(make_block_gate(id, blocks[id], rp.maps[i]));
        if (i < rp.swaps.size()) seq.push_back(make_swap_gate(static_cast<int>(i), rp.swaps[i]));
    }
    std::vector<int> avail(topo.m(), 0);
    for (const auto& g : seq) {
        const int level = std::max(avail[g.wires.first], avail[g.wires.second]);
        if (level >= static_cast<int>(sc.cycles.size())) sc.cycles.resize(level + 1);
        sc.cycles[level].push_back(g);
        avail[g.wires.first] = avail[g.wires.second] = level + 1;
    }
    derive_cycle_maps(sc);
    return sc;
}

}  // namespace

ScheduledCircuit generic_schedule(const RoutedProgram& rp,
                                  const std::vector<TwoQubitBlock>& blocks,
                                  const std::vector<SingleQubitOp>& singles,
                                  const DeviceTopology& topo) {
    ScheduledCircuit sc = generic_cycles(rp, blocks, topo);
    sc.singles = singles;
    place_singles(sc);
    return sc;
}

ScheduledCircuit hybrid_alap(const RoutedProgram& rp,
                             const std::vector<TwoQubitBlock>& blocks,
                             const std::vector<SingleQubitOp>& singles,
                             const DeviceTopology& topo) {
    ScheduledCircuit sc;
    sc.n = rp.n;
    sc.m = topo.m();
    sc.initial_map = rp.initial_map();
    sc.swaps = rp.swaps;

    // Colored prefix over the gates of the initial map.
    const auto& g0 = rp.gate_sets.front();
    const auto color = color_blocks(blocks, g0);
    const int ncolors = color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
    sc.cycles.assign(ncolors, {});
    for (std::size_t i = 0; i < g0.size(); ++i)
        sc.cycles[color[i]].push_back(make_block_gate(g0[i], blocks[g0[i]], rp.initial_map()));

    // Remaining blocks and every SWAP go through the reverse-time sweep.
    std::vector<int> pending;
    for (std::size_t i = 1; i < rp.gate_sets.size(); ++i)
        pending.insert(pending.end(), rp.gate_sets[i].begin(), rp.gate_sets[i].end());
    std::sort(pending.begin(), pending.end());

    // Map indices where each pending block is nearest-neighbor; the SWAP
    // dependency rule keys off the smallest one.
    std::vector<int> min_nn_map(blocks.size(), -1);
    for (int id : pending) {
        for (std::size_t j = 0; j < rp.maps.size(); ++j) {
            const auto& b = blocks[id].pair;
            if (topo.adjacent(rp.maps[j].phys(b.first), rp.maps[j].phys(b.second))) {
                min_nn_map[id] = static_cast<int>(j);
                break;
            }
        }
        if (min_nn_map[id] < 0)
            throw internal_error("routed block " + std::to_string(id) +
                                 " is nearest-neighbor in no map");
    }

    std::vector<std::vector<SchedGate>> rev;
    int swap_next = static_cast<int>(rp.swaps.size()) - 1;
    int map_idx = static_cast<int>(rp.maps.size()) - 1;
    long guard = 0;
    while (!pending.empty() || swap_next >= 0) {
        if (++guard > static_cast<long>(blocks.size() + rp.swaps.size() + 4) * 4)
            throw internal_error("hybrid scheduler deadlock");
        std::vector<SchedGate> cycle;
        std::set<int> occupied;
        const QubitMap& m = rp.maps[map_idx];

        for (std::size_t pi = 0; pi < pending.size();) {
            const int id = pending[pi];
            const auto& b = blocks[id].pair;
            const int wa = m.phys(b.first);
            const int wb = m.phys(b.second);
            if (topo.adjacent(wa, wb) && !occupied.count(wa) && !occupied.count(wb)) {
                cycle.push_back(make_block_gate(id, blocks[id], m));
                occupied.insert(wa);
                occupied.insert(wb);
                pending.erase(pending.begin() + pi);
            } else {
                ++pi;
            }
        }
        while (swap_next >= 0) {
            const auto& ts = rp.swaps[swap_next];
            bool dep_ok = true;
            for (int id : pending)
                if (min_nn_map[id] > swap_next) {
                    dep_ok = false;
                    break;
                }
            if (!dep_ok || occupied.count(ts.phys.first) || occupied.count(ts.phys.second)) break;
            cycle.push_back(make_swap_gate(swap_next, ts));
            occupied.insert(ts.phys.first);
            occupied.insert(ts.phys.second);
            --swap_next;
            --map_idx;
        }
        if (!cycle.empty()) rev.push_back(std::move(cycle));
    }
    for (auto it = rev.rbegin(); it != rev.rend(); ++it) sc.cycles.push_back(std::move(*it));

    derive_cycle_maps(sc);
    compact_blocks(sc, topo);

    if (rp.swaps.empty()) {
        // Algorithm 2 degenerates to the coloring pass
        sc.singles = singles;
        place_singles(sc);
        return sc;
    }

    // On heavily routed programs the strict reverse-map sweep can end up
    // deeper than plain order-respecting levelization; keep whichever
    // schedule is shorter so the hybrid never loses to the generic one.
    ScheduledCircuit gen = generic_cycles(rp, blocks, topo);
    ScheduledCircuit& best = gen.cycles.size() < sc.cycles.size() ? gen : sc;
    best.singles = singles;
    place_singles(best);
    return std::move(best);
}

void validate_schedule(const ScheduledCircuit& sc, const std::vector<TwoQubitBlock>& blocks,
                       const DeviceTopology& topo) {
    std::vector<char> block_seen(blocks.size(), 0);
    std::vector<char> swap_seen(sc.swaps.size(), 0);
    QubitMap m = sc.initial_map;
    for (std::size_t t = 0; t < sc.cycles.size(); ++t) {
        std::set<int> occupied;
        for (const auto& g : sc.cycles[t]) {
            if (occupied.count(g.wires.first) || occupied.count(g.wires.second))
                throw internal_error("cycle " + std::to_string(t) + " has overlapping wires");
            occupied.insert(g.wires.first);
            occupied.insert(g.wires.second);
            if (!topo.adjacent(g.wires.first, g.wires.second))
                throw internal_error("gate in cycle " + std::to_string(t) +
                                     " is not on a device edge");
            if (g.is_swap) {
                if (swap_seen[g.id]) throw internal_error("transition SWAP scheduled twice");
                swap_seen[g.id] = 1;
                const auto& ts = sc.swaps[g.id];
                if (ts.dressed || ts.logical.first >= 0 || ts.logical.second >= 0) {
                    const int la = m.logical_at(g.wires.first);
                    const int lb = m.logical_at(g.wires.second);
                    if (la != g.logical.first || lb != g.logical.second)
                        throw internal_error("SWAP executes on wrong logical contents in cycle " +
                                             std::to_string(t));
                }
            } else {
                if (block_seen[g.id]) throw internal_error("block scheduled twice");
                block_seen[g.id] = 1;
                if (m.logical_at(g.wires.first) != g.logical.first ||
                    m.logical_at(g.wires.second) != g.logical.second)
                    throw internal_error("block " + std::to_string(g.id) +
                                         " executes on wrong logical contents in cycle " +
                                         std::to_string(t));
            }
        }
        for (const auto& g : sc.cycles[t])
            if (g.is_swap) m.apply_physical_swap(sc.swaps[g.id].phys.first, sc.swaps[g.id].phys.second);
    }
    for (std::size_t i = 0; i < sc.swaps.size(); ++i)
        if (!swap_seen[i]) throw internal_error("transition SWAP missing from schedule");
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        bool merged = false;
        for (const auto& s : sc.swaps) merged |= s.dressed && s.merged_block == static_cast<int>(i);
        if (!block_seen[i] && !merged)
            throw internal_error("block " + std::to_string(i) + " missing from schedule");
        if (block_seen[i] && merged)
            throw internal_error("block " + std::to_string(i) + " both scheduled and dressed");
    }
    if (!(m == sc.final_map)) throw internal_error("final map does not match replay");
}

}  // namespace permuc
