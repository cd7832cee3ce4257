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

#include "permuc/router.hpp"

#include <algorithm>
#include <set>

namespace permuc {

std::vector<std::pair<int, int>> candidate_swaps(const TwoQubitBlock& block,
                                                 const QubitMap& map,
                                                 const DeviceTopology& topo) {
    std::set<std::pair<int, int>> out;
    for (int endpoint : {map.phys(block.pair.first), map.phys(block.pair.second)})
        for (int nbr : topo.neighbors(endpoint))
            out.insert(std::pair<int, int>(std::minmax(endpoint, nbr)));
    return {out.begin(), out.end()};
}

std::size_t select_swap(const std::vector<SwapCandidate>& candidates, Rng& rng) {
    if (candidates.empty()) throw internal_error("select_swap: no candidates");
    std::vector<std::size_t> keep(candidates.size());
    for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;

    auto filter = [&](auto better_or_equal_best) {
        auto best = keep.front();
        for (auto i : keep)
            if (better_or_equal_best(i, best) < 0) best = i;
        std::vector<std::size_t> next;
        for (auto i : keep)
            if (better_or_equal_best(i, best) == 0) next.push_back(i);
        keep = std::move(next);
    };

    filter([&](std::size_t a, std::size_t b) {
        return candidates[a].remaining_cost < candidates[b].remaining_cost   ? -1
               : candidates[a].remaining_cost > candidates[b].remaining_cost ? 1
                                                                             : 0;
    });
    filter([&](std::size_t a, std::size_t b) {
        return candidates[a].start_cycle < candidates[b].start_cycle   ? -1
               : candidates[a].start_cycle > candidates[b].start_cycle ? 1
                                                                       : 0;
    });
    filter([&](std::size_t a, std::size_t b) {
        const int ra = candidates[a].dressable ? 0 : 1;
        const int rb = candidates[b].dressable ? 0 : 1;
        return ra < rb ? -1 : ra > rb ? 1 : 0;
    });
    return keep[rng.below(keep.size())];
}

RoutedProgram route(const std::vector<TwoQubitBlock>& blocks, const QubitMap& phi0,
                    const DeviceTopology& topo, std::uint64_t seed,
                    std::vector<RouteTraceEntry>* trace) {
    const int n = phi0.n();
    for (const auto& b : blocks)
        if (b.pair.first < 0 || b.pair.second >= n)
            throw input_error("block pair out of range for routed circuit");

    Rng rng(sub_seed(seed, pass_id::routing));
    QubitMap map = phi0;

    // Logical pairs hosting a circuit block, for the dressability criterion.
    std::set<std::pair<int, int>> block_pairs;
    for (const auto& b : blocks) block_pairs.insert(b.pair);

    RoutedProgram rp;
    rp.n = n;
    rp.maps.push_back(map);
    rp.gate_sets.emplace_back();

    std::vector<int> unrouted;
    auto nn = [&](int id) {
        return topo.adjacent(map.phys(blocks[id].pair.first), map.phys(blocks[id].pair.second));
    };
    for (int id = 0; id < static_cast<int>(blocks.size()); ++id) {
        if (nn(id))
            rp.gate_sets.back().push_back(id);
        else
            unrouted.push_back(id);
    }

    // ASAP levelization of committed gates, for the depth criterion: each
    // committed gate occupies its physical pair for one level.
    std::vector<int> avail(topo.m(), 0);
    auto commit_level = [&](int a, int b) {
        const int level = std::max(avail[a], avail[b]);
        avail[a] = avail[b] = level + 1;
    };
    for (int id : rp.gate_sets.back())
        commit_level(map.phys(blocks[id].pair.first), map.phys(blocks[id].pair.second));

    const long iter_cap =
        static_cast<long>(topo.m()) * std::max(1, topo.diameter()) *
            std::max<std::size_t>(1, blocks.size()) +
        16;
    long iters = 0;

    while (!unrouted.empty()) {
        if (++iters > iter_cap)
            throw internal_error("routing failed to make progress after " +
                                 std::to_string(iters) + " iterations");

        // Shortest-distance unrouted block, ties by input order.
        int target = unrouted.front();
        int target_dist =
            topo.dist(map.phys(blocks[target].pair.first), map.phys(blocks[target].pair.second));
        for (int id : unrouted) {
            const int d =
                topo.dist(map.phys(blocks[id].pair.first), map.phys(blocks[id].pair.second));
            if (d < target_dist) {
                target = id;
                target_dist = d;
            }
        }

        const auto edges = candidate_swaps(blocks[target], map, topo);
        std::vector<SwapCandidate> cands;
        cands.reserve(edges.size());
        for (const auto& e : edges) {
            SwapCandidate c;
            c.edge = e;
            QubitMap after = map;
            after.apply_physical_swap(e.first, e.second);
            for (int id : unrouted)
                c.remaining_cost +=
                    topo.dist(after.phys(blocks[id].pair.first), after.phys(blocks[id].pair.second));
            c.start_cycle = std::max(avail[e.first], avail[e.second]);
            const int la = map.logical_at(e.first);
            const int lb = map.logical_at(e.second);
            c.dressable =
                la >= 0 && lb >= 0 && block_pairs.count(std::pair<int, int>(std::minmax(la, lb))) > 0;
            cands.push_back(c);
        }
        const auto pick = select_swap(cands, rng);
        const auto& chosen = cands[pick];
        if (trace) trace->push_back({target, cands, chosen.edge});

        TransitionSwap ts;
        ts.phys = chosen.edge;
        ts.logical = {map.logical_at(chosen.edge.first), map.logical_at(chosen.edge.second)};
        ts.dressable = chosen.dressable;
        ts.matrix = swap_matrix();
        rp.swaps.push_back(ts);
        ++rp.swaps_inserted;
        commit_level(chosen.edge.first, chosen.edge.second);

        map.apply_physical_swap(chosen.edge.first, chosen.edge.second);
        rp.maps.push_back(map);
        rp.gate_sets.emplace_back();
        std::vector<int> still;
        for (int id : unrouted) {
            if (nn(id)) {
                rp.gate_sets.back().push_back(id);
                commit_level(map.phys(blocks[id].pair.first), map.phys(blocks[id].pair.second));
            } else {
                still.push_back(id);
            }
        }
        unrouted = std::move(still);
    }
    return rp;
}

}  // namespace permuc
