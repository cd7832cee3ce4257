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
#include "permuc/rng.hpp"
#include "permuc/simcheck.hpp"

#include <doctest.h>

using namespace permuc;

TEST_CASE("circuit_unitary basics") {
    Circuit empty;
    empty.n = 3;
    CHECK((circuit_unitary(empty, 3) - MatX::Identity(8, 8)).cwiseAbs().maxCoeff() == 0.0);

    // little-endian CX embedding on n = 2: control wire 0
    Circuit cx;
    cx.n = 2;
    cx.gates.push_back(gate::Basis{BasisGate::CX, {0, 1}});
    const MatX got = circuit_unitary(cx, 2);
    CHECK((got - MatX(basis_matrix(BasisGate::CX))).cwiseAbs().maxCoeff() == 0.0);
    // |01> (wire 0 set) maps to |11>
    CHECK(std::abs(got(3, 1) - cplx(1, 0)) == 0.0);

    Circuit big;
    big.n = 13;
    CHECK_THROWS_AS(circuit_unitary(big, 13), input_error);
}

TEST_CASE("synthesized blocks reproduce their matrices") {
    Rng rng(12);
    for (int i = 0; i < 40; ++i) {
        const Mat4 u = block_matrix({{"XX", {0, 1}, rng.uniform_open(0, kPi)},
                                     {"YY", {0, 1}, rng.uniform_open(0, kPi)},
                                     {"ZZ", {0, 1}, rng.uniform_open(0, kPi)}},
                                    1.0);
        const MatX got = circuit_unitary(synth_cnot(u, 0, 1), 2);
        Eigen::Index r, c;
        got.cwiseAbs().maxCoeff(&r, &c);
        cplx ph = MatX(u)(r, c) / got(r, c);
        ph /= std::abs(ph);
        REQUIRE((ph * got - MatX(u)).cwiseAbs().maxCoeff() < 1e-9);
    }
}

TEST_CASE("uncompiled all-to-all circuit verifies trivially") {
    const Hamiltonian h = gen_nnn(Family::nnn_heisenberg, 5, 4);
    const auto [blocks, singles] = unify_terms(h);
    const ScheduledCircuit sc = color_schedule(blocks, singles, QubitMap::identity(5, 5));
    const VerifyReport rep = verify_permutation_equivalence(sc, h);
    CHECK(rep.ok);
    CHECK(rep.max_dev < 1e-10);
    CHECK(std::abs(rep.max_dev - rep.max_dev_alt) < 1e-9);  // anchor invariance
}

TEST_CASE("full pipeline on a grid verifies") {
    const Hamiltonian h = gen_nnn(Family::nnn_ising, 6, 3, false);
    const DeviceTopology topo = make_grid(2, 3);
    CompileOptions opt;
    opt.seed = 3;
    const CompileResult r = compile(h, topo, opt);
    const VerifyReport rep = verify_permutation_equivalence(r.schedule, h);
    CHECK(rep.ok);
    CHECK(rep.max_dev < 1e-9);
    CHECK(rep.emitted_order.size() == r.blocks.size());
}

TEST_CASE("anti-commuting reorder in the reference is detected") {
    // exp(it X1X2) and exp(it Y2Y3) anti-commute; swapping them in the
    // reference while keeping the compiled order fixed must show a nonzero
    // deviation
    const Hamiltonian h = build_hamiltonian(
        3, {{"XX", {0, 1}, 0.7}, {"YY", {1, 2}, 0.9}}, 1.0, 1);
    auto [blocks, singles] = unify_terms(h);
    REQUIRE(blocks.size() == 2);

    // compiled order: block 0 then block 1 (all-to-all schedule)
    const ScheduledCircuit sc = color_schedule(blocks, singles, QubitMap::identity(3, 3));
    CHECK(verify_permutation_equivalence(sc, h).ok);

    // negative control: build the reference in the opposite order by hand
    Circuit fwd, rev;
    fwd.n = rev.n = 3;
    fwd.gates.push_back(gate::Block{blocks[0]});
    fwd.gates.push_back(gate::Block{blocks[1]});
    rev.gates.push_back(gate::Block{blocks[1]});
    rev.gates.push_back(gate::Block{blocks[0]});
    const MatX a = circuit_unitary(fwd, 3);
    const MatX b = circuit_unitary(rev, 3);
    Eigen::Index r, c;
    a.cwiseAbs().maxCoeff(&r, &c);
    cplx ph = b(r, c) / a(r, c);
    ph /= std::abs(ph);
    CHECK((b - ph * a).cwiseAbs().maxCoeff() > 1e-3);
}

TEST_CASE("corrupted schedules are reported with the missing operator") {
    const Hamiltonian h = gen_nnn(Family::nnn_ising, 6, 1, false);
    const DeviceTopology topo = make_grid(2, 3);
    CompileOptions opt;
    opt.seed = 1;
    CompileResult r = compile(h, topo, opt);

    // delete one scheduled block gate
    ScheduledCircuit broken = r.schedule;
    for (auto& cyc : broken.cycles)
        if (!cyc.empty() && !cyc.front().is_swap) {
            cyc.erase(cyc.begin());
            break;
        }
    const VerifyReport rep = verify_permutation_equivalence(broken, h);
    CHECK(!rep.ok);
    CHECK(rep.problem.find("emitted 0 times") != std::string::npos);
}

TEST_CASE("width cap is enforced") {
    const Hamiltonian h = gen_nnn(Family::nnn_ising, 6, 1, false);
    const DeviceTopology topo = make_grid(2, 3);
    CompileOptions opt;
    opt.seed = 1;
    const CompileResult r = compile(h, topo, opt);
    CHECK_THROWS_AS(verify_permutation_equivalence(r.schedule, h, 4), input_error);
}

TEST_CASE("verification passes before and after dressing") {
    const Hamiltonian h = gen_nnn(Family::nnn_heisenberg, 6, 8);
    const DeviceTopology topo = make_grid(2, 3);
    const auto [blocks, singles] = unify_terms(h);
    TabuParams params;
    params.seed = 8;
    const auto [phi0, cost] = tabu_place(flow_matrix(blocks, h.n), topo, params);
    const RoutedProgram raw = route(blocks, phi0, topo, 8);

    const ScheduledCircuit undressed = hybrid_alap(raw, blocks, singles, topo);
    CHECK(verify_permutation_equivalence(undressed, h).ok);

    const RoutedProgram dressed = dress_swaps(raw, blocks);
    const ScheduledCircuit after = hybrid_alap(dressed, blocks, singles, topo);
    CHECK(verify_permutation_equivalence(after, h).ok);
}

TEST_CASE("spot check at n = 10 stays within the width cap") {
    const Hamiltonian h = gen_nnn(Family::nnn_ising, 10, 2, false);
    const DeviceTopology topo = make_line(10);
    CompileOptions opt;
    opt.seed = 2;
    const CompileResult r = compile(h, topo, opt);
    const VerifyReport rep = verify_permutation_equivalence(r.schedule, h);
    CHECK(rep.ok);
    CHECK(rep.sim_width <= 12);
}

TEST_CASE("multi-layer expansion verifies and composes to identity") {
    const auto hams = gen_qaoa_reg3(4, 7, 1);
    const Hamiltonian& h = hams.front();
    const DeviceTopology topo = make_line(4);
    CompileOptions opt;
    opt.seed = 7;
    const CompileResult r = compile(h, topo, opt);

    const auto two = expand_layers(r.schedule, 2);
    CHECK(two.size() == 2);
    CHECK(two[1].initial_map == two[0].final_map);
    CHECK(two[1].final_map == two[0].initial_map);  // reversal undoes every SWAP
    CHECK(verify_multilayer(two, h));

    const auto three = expand_layers(r.schedule, 3);
    CHECK(three[2].final_map == three[0].final_map);
    CHECK(verify_multilayer(three, h));
}
