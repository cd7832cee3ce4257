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

#include "permuc/simcheck.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace permuc {

void apply_one_qubit(MatX& m, const Mat2& g, int wire) {
    const Eigen::Index dim = m.rows();
    const Eigen::Index bit = Eigen::Index(1) << wire;
    for (Eigen::Index col = 0; col < dim; ++col)
        for (Eigen::Index r = 0; r < dim; ++r) {
            if (r & bit) continue;
            const cplx v0 = m(r, col);
            const cplx v1 = m(r | bit, col);
            m(r, col) = g(0, 0) * v0 + g(0, 1) * v1;
            m(r | bit, col) = g(1, 0) * v0 + g(1, 1) * v1;
        }
}

void apply_two_qubit(MatX& m, const Mat4& g, int wire_slot0, int wire_slot1) {
    const Eigen::Index dim = m.rows();
    const Eigen::Index b0 = Eigen::Index(1) << wire_slot0;
    const Eigen::Index b1 = Eigen::Index(1) << wire_slot1;
    for (Eigen::Index col = 0; col < dim; ++col)
        for (Eigen::Index r = 0; r < dim; ++r) {
            if ((r & b0) || (r & b1)) continue;
            cplx v[4] = {m(r, col), m(r | b0, col), m(r | b1, col), m(r | b0 | b1, col)};
            for (int i = 0; i < 4; ++i) {
                const Eigen::Index row = r | (i & 1 ? b0 : 0) | (i & 2 ? b1 : 0);
                m(row, col) = g(i, 0) * v[0] + g(i, 1) * v[1] + g(i, 2) * v[2] + g(i, 3) * v[3];
            }
        }
}

MatX circuit_unitary(const Circuit& c, int n, int cap) {
    if (n > cap)
        throw input_error("circuit_unitary: n = " + std::to_string(n) +
                          " above the dense-simulation cap " + std::to_string(cap));
    const Eigen::Index dim = Eigen::Index(1) << n;
    MatX m = MatX::Identity(dim, dim);
    for (const auto& g : c.gates) {
        std::visit(
            [&](const auto& v) {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, gate::Block>) {
                    apply_two_qubit(m, v.block.matrix, v.block.pair.first, v.block.pair.second);
                } else if constexpr (std::is_same_v<T, gate::Swap>) {
                    apply_two_qubit(m, swap_matrix(), v.qubits.first, v.qubits.second);
                } else if constexpr (std::is_same_v<T, gate::Single>) {
                    apply_one_qubit(m, v.op.matrix, v.op.qubit);
                } else if constexpr (std::is_same_v<T, gate::Basis>) {
                    apply_two_qubit(m, basis_matrix(v.name), v.qubits.first, v.qubits.second);
                } else {
                    apply_one_qubit(m, rot_matrix(v.axis, v.angle), v.qubit);
                }
            },
            g);
    }
    return m;
}

namespace {

/// Deviation after aligning the global phase on the matrix's
/// largest-magnitude entry (anchor 0) or the second largest (anchor 1).
double aligned_dev(const MatX& have, const MatX& want, int anchor) {
    Eigen::Index r0 = 0, c0 = 0;
    want.cwiseAbs().maxCoeff(&r0, &c0);
    if (anchor == 1) {
        // second anchor: largest entry outside the first anchor's column
        double best = -1.0;
        Eigen::Index r1 = r0, c1 = c0;
        for (Eigen::Index c = 0; c < want.cols(); ++c) {
            if (c == c0) continue;
            for (Eigen::Index r = 0; r < want.rows(); ++r)
                if (std::abs(want(r, c)) > best) {
                    best = std::abs(want(r, c));
                    r1 = r;
                    c1 = c;
                }
        }
        r0 = r1;
        c0 = c1;
    }
    if (std::abs(want(r0, c0)) < 1e-12) return 1.0;
    cplx phase = have(r0, c0) / want(r0, c0);
    const double mag = std::abs(phase);
    if (mag < 1e-12) return 1.0;
    phase /= mag;
    return (have - phase * want).cwiseAbs().maxCoeff();
}

struct WireIndex {
    std::vector<int> wires;           // sorted physical wires in the support
    std::map<int, int> local;         // physical wire -> local index

    explicit WireIndex(const std::set<int>& support) {
        wires.assign(support.begin(), support.end());
        for (std::size_t i = 0; i < wires.size(); ++i) local[wires[i]] = static_cast<int>(i);
    }
    int width() const { return static_cast<int>(wires.size()); }
    int operator()(int phys) const { return local.at(phys); }
};

}  // namespace

VerifyReport verify_permutation_equivalence(const ScheduledCircuit& sc_in, const Hamiltonian& h,
                                            int cap) {
    VerifyReport rep;
    auto [blocks, singles] = unify_terms(h);

    // rehydrate operator matrices: schedules loaded from JSON carry only
    // the structure
    ScheduledCircuit sc = sc_in;
    if (sc.singles.size() != singles.size()) {
        rep.problem = "single-qubit operator count mismatch";
        return rep;
    }
    for (std::size_t i = 0; i < singles.size(); ++i) {
        if (sc.singles[i].qubit != singles[i].qubit) {
            rep.problem = "single-qubit operator order mismatch";
            return rep;
        }
        sc.singles[i].matrix = singles[i].matrix;
    }
    for (auto& ts : sc.swaps) {
        if (!ts.dressed) continue;
        if (ts.merged_block < 0 || ts.merged_block >= static_cast<int>(blocks.size())) {
            rep.problem = "dressed SWAP references an unknown block";
            return rep;
        }
        ts.matrix = swap_matrix() * blocks[ts.merged_block].matrix;
    }

    // emitted operator order: blocks and dressed-swap block factors in cycle
    // order, single-qubit ops at their assigned cycles
    struct Emitted {
        int cycle;
        bool is_single;
        int id;
    };
    std::vector<Emitted> order;
    for (std::size_t t = 0; t < sc.cycles.size(); ++t)
        for (const auto& g : sc.cycles[t]) {
            if (g.is_swap) {
                if (sc.swaps[g.id].dressed)
                    order.push_back({static_cast<int>(t), false, sc.swaps[g.id].merged_block});
            } else {
                order.push_back({static_cast<int>(t), false, g.id});
            }
        }
    for (std::size_t i = 0; i < sc.singles.size(); ++i)
        order.push_back({sc.single_cycle[i], true, static_cast<int>(i)});
    std::stable_sort(order.begin(), order.end(),
                     [](const Emitted& a, const Emitted& b) { return a.cycle < b.cycle; });

    std::vector<int> block_count(blocks.size(), 0);
    for (const auto& e : order)
        if (!e.is_single) {
            if (e.id < 0 || e.id >= static_cast<int>(blocks.size())) {
                rep.problem = "emitted block id out of range";
                return rep;
            }
            ++block_count[e.id];
            rep.emitted_order.push_back(e.id);
        }
    for (std::size_t i = 0; i < blocks.size(); ++i)
        if (block_count[i] != 1) {
            std::ostringstream os;
            os << "operator on pair (" << blocks[i].pair.first << "," << blocks[i].pair.second
               << ") emitted " << block_count[i] << " times";
            rep.problem = os.str();
            return rep;
        }

    // support wires: everything the hardware circuit touches plus the homes
    // of all logical qubits under the initial map
    const HwCircuit hw = expand_hw(sc, blocks, GateSet{BasisGate::CX});
    std::set<int> support;
    for (int l = 0; l < sc.initial_map.n(); ++l) support.insert(sc.initial_map.phys(l));
    for (const auto& it : hw.items) {
        if (it.two_qubit) {
            support.insert(it.wires.first);
            support.insert(it.wires.second);
        } else {
            support.insert(it.wire);
        }
    }
    for (const auto& s : sc.swaps) {
        support.insert(s.phys.first);
        support.insert(s.phys.second);
    }
    const WireIndex widx(support);
    rep.sim_width = widx.width();
    if (widx.width() > cap)
        throw input_error("verification needs " + std::to_string(widx.width()) +
                          " wires, above the cap " + std::to_string(cap));

    const Eigen::Index dim = Eigen::Index(1) << widx.width();

    // compiled unitary from the fully synthesized circuit
    MatX compiled = MatX::Identity(dim, dim);
    for (const auto& it : hw.items) {
        if (it.two_qubit)
            apply_two_qubit(compiled, basis_matrix(it.basis), widx(it.wires.first),
                            widx(it.wires.second));
        else
            apply_one_qubit(compiled, it.run, widx(it.wire));
    }

    // reference: operators in emitted order, embedded in the initial frame
    MatX reference = MatX::Identity(dim, dim);
    for (const auto& e : order) {
        if (e.is_single)
            apply_one_qubit(reference, sc.singles[e.id].matrix,
                            widx(sc.initial_map.phys(sc.singles[e.id].qubit)));
        else
            apply_two_qubit(reference, blocks[e.id].matrix,
                            widx(sc.initial_map.phys(blocks[e.id].pair.first)),
                            widx(sc.initial_map.phys(blocks[e.id].pair.second)));
    }

    // permutation of final_map o initial_map^-1, extended to empty slots by
    // composing the transition swaps in execution order
    std::vector<int> dest(widx.width());
    for (int i = 0; i < widx.width(); ++i) dest[i] = i;
    for (const auto& cyc : sc.cycles)
        for (const auto& g : cyc) {
            if (!g.is_swap) continue;
            const int a = widx(sc.swaps[g.id].phys.first);
            const int b = widx(sc.swaps[g.id].phys.second);
            for (auto& d : dest) d = d == a ? b : d == b ? a : d;
        }
    // P acts after the reference: P moves the basis bit of wire w to
    // dest[w], so (P R) row y gathers R row x with y = bit-scatter(x)
    MatX pr = MatX::Zero(dim, dim);
    for (Eigen::Index x = 0; x < dim; ++x) {
        Eigen::Index y = 0;
        for (int w = 0; w < widx.width(); ++w)
            if (x & (Eigen::Index(1) << w)) y |= Eigen::Index(1) << dest[w];
        pr.row(y) = reference.row(x);
    }

    rep.max_dev = aligned_dev(compiled, pr, 0);
    rep.max_dev_alt = aligned_dev(compiled, pr, 1);
    rep.ok = rep.max_dev < 1e-9;
    if (!rep.ok && rep.problem.empty()) rep.problem = "unitary deviation above tolerance";
    return rep;
}

bool verify_multilayer(const std::vector<ScheduledCircuit>& layers, const Hamiltonian& h,
                       int cap) {
    if (layers.empty()) return false;
    for (std::size_t i = 1; i < layers.size(); ++i)
        if (!(layers[i].initial_map == layers[i - 1].final_map)) return false;
    if (layers.size() % 2 == 0 && !(layers.back().final_map == layers.front().initial_map))
        return false;
    for (const auto& layer : layers)
        if (!verify_permutation_equivalence(layer, h, cap).ok) return false;
    return true;
}

}  // namespace permuc
