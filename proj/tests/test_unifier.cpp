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

#include "permuc/benchgen.hpp"
#include "permuc/placement.hpp"
#include "permuc/unifier.hpp"

#include <doctest.h>

#include <set>

using namespace permuc;

TEST_CASE("dressing merges a co-located block into the SWAP") {
    const DeviceTopology topo = make_line(4);
    // blocks: (0,1) nearest-neighbor, (0,2) needs one SWAP; the inserted
    // SWAP sits on a pair hosting a circuit block
    std::vector<TwoQubitBlock> blocks;
    for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {0, 2}}) {
        TwoQubitBlock b;
        b.pair = {u, v};
        b.terms = {{"ZZ", {u, v}, 0.8}};
        b.matrix = block_matrix(b.terms, 1.0);
        blocks.push_back(b);
    }
    RoutedProgram rp = route(blocks, QubitMap::identity(4, 4), topo, 0);
    REQUIRE(rp.swaps_inserted >= 1);
    const int before_blocks = [](const RoutedProgram& r) {
        int k = 0;
        for (const auto& gs : r.gate_sets) k += static_cast<int>(gs.size());
        return k;
    }(rp);

    const RoutedProgram dressed = dress_swaps(rp, blocks);
    CHECK(dressed.swaps_dressed >= 1);
    CHECK(dressed.swaps_dressed <= dressed.swaps_inserted);

    int after_blocks = 0;
    std::set<int> merged;
    for (const auto& gs : dressed.gate_sets) after_blocks += static_cast<int>(gs.size());
    for (const auto& s : dressed.swaps)
        if (s.dressed) {
            CHECK(!merged.count(s.merged_block));
            merged.insert(s.merged_block);
            // matrix identity: dressed = SWAP * block
            const Mat4 want = swap_matrix() * blocks[s.merged_block].matrix;
            CHECK((s.matrix - want).cwiseAbs().maxCoeff() < 1e-12);
        }
    CHECK(after_blocks + static_cast<int>(merged.size()) == before_blocks);
}

TEST_CASE("a SWAP with no co-located block stays plain") {
    const DeviceTopology topo = make_line(4);
    std::vector<TwoQubitBlock> blocks;
    TwoQubitBlock far;
    far.pair = {0, 3};
    far.terms = {{"XX", {0, 3}, 0.4}};
    far.matrix = block_matrix(far.terms, 1.0);
    blocks.push_back(far);

    RoutedProgram rp = route(blocks, QubitMap::identity(4, 4), topo, 0);
    REQUIRE(rp.swaps_inserted >= 1);
    const RoutedProgram dressed = dress_swaps(rp, blocks);
    // the only circuit block is the one being routed, never co-located with
    // its own movement SWAP on the same logical pair
    for (const auto& s : dressed.swaps) CHECK(!s.dressed);
    CHECK(dressed.swaps_dressed == 0);
}

TEST_CASE("NNN heisenberg on a grid dresses most swaps") {
    const DeviceTopology topo = make_grid(2, 5);
    int dressed_total = 0, swaps_total = 0;
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const Hamiltonian h = gen_nnn(Family::nnn_heisenberg, 10, seed);
        const auto [blocks, singles] = unify_terms(h);
        TabuParams params;
        params.seed = seed;
        const auto [phi0, cost] = tabu_place(flow_matrix(blocks, h.n), topo, params);
        const RoutedProgram rp = dress_swaps(route(blocks, phi0, topo, seed), blocks);
        dressed_total += rp.swaps_dressed;
        swaps_total += rp.swaps_inserted;
    }
    CHECK(swaps_total > 0);
    CHECK(dressed_total * 2 >= swaps_total);  // a large fraction is dressed
}
