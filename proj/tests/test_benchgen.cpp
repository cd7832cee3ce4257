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

#include "permuc/pipeline.hpp"

#include <doctest.h>

#include <map>

using namespace permuc;

TEST_CASE("NNN families have 2n-3 interaction edges") {
    for (int n : {3, 6, 10, 50}) {
        for (Family f : {Family::nnn_ising, Family::nnn_xy, Family::nnn_heisenberg}) {
            const Hamiltonian h = gen_nnn(f, n, 13);
            CHECK(h.interaction_edges().size() == static_cast<std::size_t>(2 * n - 3));
            for (const auto& t : h.terms) {
                CHECK(t.coeff > 0.0);
                CHECK(t.coeff < kPi);
            }
        }
    }
    CHECK_THROWS_AS(gen_nnn(Family::nnn_ising, 2, 0), input_error);

    // Ising n=4: 5 ZZ terms plus one X per qubit
    const Hamiltonian ising = gen_nnn(Family::nnn_ising, 4, 0, true);
    int zz = 0, x = 0;
    for (const auto& t : ising.terms) (t.paulis == "ZZ" ? zz : x) += 1;
    CHECK(zz == 5);
    CHECK(x == 4);
    CHECK(gen_nnn(Family::nnn_ising, 4, 0, false).terms.size() == 5);
}

TEST_CASE("QAOA-REG-3 samples simple 3-regular graphs") {
    // n = 4 forces K4
    const auto k4 = gen_qaoa_reg3(4, 0, 1);
    CHECK(k4.front().interaction_edges().size() == 6);

    CHECK(gen_qaoa_reg3(20, 1, 1).front().interaction_edges().size() == 30);

    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const int n = 4 + 2 * static_cast<int>(seed % 10);  // 4..22
        const auto hams = gen_qaoa_reg3(n, seed, 1);
        const auto edges = hams.front().interaction_edges();
        CHECK(edges.size() == static_cast<std::size_t>(3 * n / 2));
        std::map<int, int> degree;
        for (auto [u, v] : edges) {
            CHECK(u != v);
            ++degree[u];
            ++degree[v];
        }
        for (int v = 0; v < n; ++v) CHECK(degree[v] == 3);
    }
    CHECK_THROWS_AS(gen_qaoa_reg3(5, 0, 1), input_error);
    CHECK_THROWS_AS(gen_qaoa_reg3(2, 0, 1), input_error);

    // determinism and per-layer parameters
    const auto a = gen_qaoa_reg3(8, 3, 2);
    const auto b = gen_qaoa_reg3(8, 3, 2);
    CHECK(a[0].terms[0].coeff == b[0].terms[0].coeff);
    const auto fixed = gen_qaoa_reg3(8, 3, 2, {{0.25, 0.5}, {0.75, 1.0}});
    CHECK(fixed[0].terms[0].coeff == 0.25);
    CHECK(fixed[1].terms[0].coeff == 0.75);
}

TEST_CASE("heisenberg lattices use cube-like shapes") {
    CHECK(gen_heisenberg_lattice(Family::heisenberg_1d, 30, 0).interaction_edges().size() == 29);
    // 5x6 grid: 4*6 + 5*5 = 49 edges
    CHECK(gen_heisenberg_lattice(Family::heisenberg_2d, 30, 0).interaction_edges().size() == 49);
    // 2x3x5 lattice: 15 + 20 + 24 = 59 edges
    CHECK(gen_heisenberg_lattice(Family::heisenberg_3d, 30, 0).interaction_edges().size() == 59);
}

TEST_CASE("baseline router is order-preserving and swap-heavier") {
    const DeviceTopology topo = make_grid(2, 3);
    const Hamiltonian h = gen_nnn(Family::nnn_ising, 6, 2, false);
    const auto [blocks, singles] = unify_terms(h);
    TabuParams params;
    params.seed = 2;
    const auto [phi0, cost] = tabu_place(flow_matrix(blocks, h.n), topo, params);

    const RoutedProgram base = baseline_route(blocks, phi0, topo);
    const RoutedProgram smart = route(blocks, phi0, topo, 2);
    CHECK(base.swaps_dressed == 0);
    CHECK(smart.swaps_inserted <= base.swaps_inserted);

    // all-NN input: identical, zero swaps
    std::vector<TwoQubitBlock> nn = {blocks[0]};
    const QubitMap direct = phi0;
    CHECK(baseline_route(nn, direct, topo).swaps_inserted ==
          route(nn, direct, topo, 0).swaps_inserted);
}

TEST_CASE("layer expansion structure") {
    const auto hams = gen_qaoa_reg3(8, 5, 1);
    const Hamiltonian& h = hams.front();
    const DeviceTopology topo = preset("aspen16");
    CompileOptions opt;
    opt.seed = 5;
    const CompileResult r = compile(h, topo, opt);

    const auto one = expand_layers(r.schedule, 1);
    CHECK(one.size() == 1);

    const auto three = expand_layers(r.schedule, 3);
    int swaps = 0;
    for (const auto& layer : three) swaps += layer.swaps_inserted();
    CHECK(swaps == 3 * r.schedule.swaps_inserted());
}

TEST_CASE("overhead report") {
    Metrics a;
    a.two_qubit_count = 40;
    a.two_qubit_depth = 10;
    a.total_depth = 20;
    const OverheadReport zero = overhead(a, a);
    CHECK(zero.two_qubit_delta == 0);
    CHECK(zero.two_qubit_ratio == 1.0);

    Metrics b = a;
    b.two_qubit_count = 50;
    b.total_depth = 30;
    const OverheadReport r = overhead(b, a);
    CHECK(r.two_qubit_delta == 10);
    CHECK(r.two_qubit_ratio == doctest::Approx(1.25));
    CHECK(r.total_depth_delta == 10);
}
