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

#include "permuc/rng.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace permuc {

Family parse_family(const std::string& name) {
    if (name == "nnn-ising") return Family::nnn_ising;
    if (name == "nnn-xy") return Family::nnn_xy;
    if (name == "nnn-heisenberg") return Family::nnn_heisenberg;
    if (name == "qaoa-reg3") return Family::qaoa_reg3;
    if (name == "heisenberg-1d") return Family::heisenberg_1d;
    if (name == "heisenberg-2d") return Family::heisenberg_2d;
    if (name == "heisenberg-3d") return Family::heisenberg_3d;
    throw input_error("unknown benchmark family \"" + name + "\"");
}

const char* family_name(Family f) {
    switch (f) {
        case Family::nnn_ising: return "nnn-ising";
        case Family::nnn_xy: return "nnn-xy";
        case Family::nnn_heisenberg: return "nnn-heisenberg";
        case Family::qaoa_reg3: return "qaoa-reg3";
        case Family::heisenberg_1d: return "heisenberg-1d";
        case Family::heisenberg_2d: return "heisenberg-2d";
        case Family::heisenberg_3d: return "heisenberg-3d";
    }
    return "?";
}

namespace {

std::vector<PauliTerm> model_terms(const std::vector<std::pair<int, int>>& edges, int n,
                                   Family family, Rng& rng, bool ising_field) {
    std::vector<PauliTerm> terms;
    const bool heis = family == Family::nnn_heisenberg || family == Family::heisenberg_1d ||
                      family == Family::heisenberg_2d || family == Family::heisenberg_3d;
    for (const auto& [u, v] : edges) {
        if (family == Family::nnn_ising) {
            terms.push_back({"ZZ", {u, v}, rng.uniform_open(0, kPi)});
        } else if (family == Family::nnn_xy) {
            terms.push_back({"XX", {u, v}, rng.uniform_open(0, kPi)});
            terms.push_back({"YY", {u, v}, rng.uniform_open(0, kPi)});
        } else if (heis) {
            terms.push_back({"XX", {u, v}, rng.uniform_open(0, kPi)});
            terms.push_back({"YY", {u, v}, rng.uniform_open(0, kPi)});
            terms.push_back({"ZZ", {u, v}, rng.uniform_open(0, kPi)});
        } else {
            throw input_error("model_terms: not a Hamiltonian-model family");
        }
    }
    if (family == Family::nnn_ising && ising_field)
        for (int k = 0; k < n; ++k) terms.push_back({"X", {k}, rng.uniform_open(0, kPi)});
    return terms;
}

}  // namespace

Hamiltonian gen_nnn(Family family, int n, std::uint64_t seed, bool ising_field) {
    if (n < 3) throw input_error("NNN models need n >= 3");
    if (family != Family::nnn_ising && family != Family::nnn_xy &&
        family != Family::nnn_heisenberg)
        throw input_error("gen_nnn: not an NNN family");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    for (int i = 0; i + 2 < n; ++i) edges.emplace_back(i, i + 2);
    Rng rng(sub_seed(seed, pass_id::benchgen));
    return build_hamiltonian(n, model_terms(edges, n, family, rng, ising_field), 1.0, 1);
}

namespace {

/// Most cube-like factorization of n into dims factors, smallest first.
std::vector<int> lattice_shape(int n, int dims) {
    std::vector<int> best;
    if (dims == 2) {
        for (int r = 1; r * r <= n; ++r)
            if (n % r == 0) best = {r, n / r};
    } else {
        for (int a = 1; a * a * a <= n; ++a) {
            if (n % a) continue;
            const int rest = n / a;
            for (int b = a; b * b <= rest; ++b)
                if (rest % b == 0) best = {a, b, rest / b};
        }
    }
    return best;
}

std::vector<std::pair<int, int>> lattice_edges(const std::vector<int>& shape) {
    std::vector<std::pair<int, int>> edges;
    const int dims = static_cast<int>(shape.size());
    std::vector<int> stride(dims, 1);
    for (int d = 1; d < dims; ++d) stride[d] = stride[d - 1] * shape[d - 1];
    int n = 1;
    for (int s : shape) n *= s;
    for (int v = 0; v < n; ++v) {
        int rem = v;
        std::vector<int> coord(dims);
        for (int d = 0; d < dims; ++d) {
            coord[d] = rem % shape[d];
            rem /= shape[d];
        }
        for (int d = 0; d < dims; ++d)
            if (coord[d] + 1 < shape[d]) edges.emplace_back(v, v + stride[d]);
    }
    return edges;
}

}  // namespace

Hamiltonian gen_heisenberg_lattice(Family family, int n, std::uint64_t seed) {
    std::vector<std::pair<int, int>> edges;
    if (family == Family::heisenberg_1d) {
        for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    } else if (family == Family::heisenberg_2d || family == Family::heisenberg_3d) {
        const auto shape = lattice_shape(n, family == Family::heisenberg_2d ? 2 : 3);
        edges = lattice_edges(shape);
    } else {
        throw input_error("gen_heisenberg_lattice: not a lattice family");
    }
    Rng rng(sub_seed(seed, pass_id::benchgen));
    return build_hamiltonian(n, model_terms(edges, n, family, rng, false), 1.0, 1);
}

Hamiltonian gen_instance(const BenchmarkSpec& spec) {
    switch (spec.family) {
        case Family::nnn_ising:
        case Family::nnn_xy:
        case Family::nnn_heisenberg:
            return gen_nnn(spec.family, spec.n, spec.seed, spec.ising_field);
        case Family::qaoa_reg3:
            return gen_qaoa_reg3(spec.n, spec.seed, 1, spec.params).front();
        default:
            return gen_heisenberg_lattice(spec.family, spec.n, spec.seed);
    }
}

std::vector<Hamiltonian> gen_qaoa_reg3(int n, std::uint64_t seed, int layers,
                                       const std::vector<std::pair<double, double>>& params) {
    if (n < 4 || n % 2 != 0) throw input_error("QAOA-REG-3 needs even n >= 4");
    if (layers < 1) throw input_error("layer count must be >= 1");
    Rng rng(sub_seed(seed, pass_id::benchgen));

    // pairing-model sampling with rejection of loops and multi-edges
    std::vector<std::pair<int, int>> edges;
    bool done = false;
    for (int attempt = 0; attempt < 1000 && !done; ++attempt) {
        std::vector<int> stubs;
        stubs.reserve(3 * static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            for (int k = 0; k < 3; ++k) stubs.push_back(v);
        rng.shuffle(stubs);
        std::set<std::pair<int, int>> seen;
        edges.clear();
        done = true;
        for (std::size_t i = 0; i < stubs.size(); i += 2) {
            const std::pair<int, int> e = std::minmax(stubs[i], stubs[i + 1]);
            if (e.first == e.second || !seen.insert(e).second) {
                done = false;
                break;
            }
            edges.push_back(e);
        }
    }
    if (!done) throw input_error("failed to sample a simple 3-regular graph after 1000 attempts");
    std::sort(edges.begin(), edges.end());

    std::vector<Hamiltonian> hams;
    for (int p = 0; p < layers; ++p) {
        double gamma, beta;
        if (p < static_cast<int>(params.size())) {
            gamma = params[p].first;
            beta = params[p].second;
        } else {
            gamma = rng.uniform_open(0, kPi);
            beta = rng.uniform_open(0, kPi);
        }
        std::vector<PauliTerm> terms;
        for (const auto& [u, v] : edges) terms.push_back({"ZZ", {u, v}, gamma});
        for (int k = 0; k < n; ++k) terms.push_back({"X", {k}, beta});
        hams.push_back(build_hamiltonian(n, std::move(terms), 1.0, 1));
    }
    return hams;
}

RoutedProgram baseline_route(const std::vector<TwoQubitBlock>& blocks, const QubitMap& phi0,
                             const DeviceTopology& topo) {
    RoutedProgram rp;
    rp.n = phi0.n();
    rp.maps.push_back(phi0);
    rp.gate_sets.emplace_back();
    QubitMap map = phi0;

    for (int id = 0; id < static_cast<int>(blocks.size()); ++id) {
        const auto& pair = blocks[id].pair;
        long guard = 0;
        while (!topo.adjacent(map.phys(pair.first), map.phys(pair.second))) {
            if (++guard > topo.m() * std::max(1, topo.diameter()))
                throw internal_error("baseline router failed to converge");
            const int pa = map.phys(pair.first);
            const int pb = map.phys(pair.second);
            // move the endpoint whose relocation most reduces the distance;
            // ties toward the lexicographically smallest (endpoint, neighbor)
            int best_from = -1, best_to = -1, best_d = topo.dist(pa, pb);
            for (int endpoint : {std::min(pa, pb), std::max(pa, pb)})
                for (int nbr : topo.neighbors(endpoint)) {
                    const int other = endpoint == pa ? pb : pa;
                    const int d = topo.dist(nbr, other);
                    if (d < best_d) {
                        best_d = d;
                        best_from = endpoint;
                        best_to = nbr;
                    }
                }
            if (best_from < 0) throw internal_error("baseline router: no distance-reducing swap");
            TransitionSwap ts;
            ts.phys = std::minmax(best_from, best_to);
            ts.logical = {map.logical_at(ts.phys.first), map.logical_at(ts.phys.second)};
            ts.matrix = swap_matrix();
            rp.swaps.push_back(ts);
            ++rp.swaps_inserted;
            map.apply_physical_swap(ts.phys.first, ts.phys.second);
            rp.maps.push_back(map);
            rp.gate_sets.emplace_back();
        }
        rp.gate_sets.back().push_back(id);
    }
    return rp;
}

ScheduledCircuit reverse_schedule(const ScheduledCircuit& sc) {
    ScheduledCircuit out;
    out.n = sc.n;
    out.m = sc.m;
    out.initial_map = sc.final_map;
    out.singles = sc.singles;

    // the reversed circuit applies the transition SWAPs backwards; their
    // slot contents at execution are the exchanged pair
    out.swaps = sc.swaps;
    for (auto& ts : out.swaps) std::swap(ts.logical.first, ts.logical.second);

    for (auto it = sc.cycles.rbegin(); it != sc.cycles.rend(); ++it) {
        std::vector<SchedGate> cycle;
        for (const auto& g : *it) {
            SchedGate r = g;
            if (g.is_swap) {
                const auto& ts = out.swaps[g.id];
                if (ts.logical.first >= 0 && ts.logical.second >= 0 &&
                    ts.logical.first > ts.logical.second) {
                    r.logical = {ts.logical.second, ts.logical.first};
                    r.wires = {ts.phys.second, ts.phys.first};
                } else {
                    r.logical = ts.logical;
                    r.wires = ts.phys;
                }
            }
            cycle.push_back(r);
        }
        out.cycles.push_back(std::move(cycle));
    }

    QubitMap m = out.initial_map;
    for (const auto& cyc : out.cycles) {
        out.cycle_maps.push_back(m);
        for (const auto& g : cyc)
            if (g.is_swap)
                m.apply_physical_swap(out.swaps[g.id].phys.first, out.swaps[g.id].phys.second);
    }
    out.final_map = m;

    // mirror the single-qubit placements into the reversed cycle structure;
    // singles in appended cycles stay past the end but follow the new final
    // map
    const int c = static_cast<int>(sc.cycles.size());
    out.single_cycle = sc.single_cycle;
    out.single_wire = sc.single_wire;
    for (std::size_t i = 0; i < out.single_cycle.size(); ++i) {
        if (out.single_cycle[i] < c)
            out.single_cycle[i] = c - 1 - out.single_cycle[i];
        else
            out.single_wire[i] = out.final_map.phys(out.singles[i].qubit);
    }
    return out;
}

std::vector<ScheduledCircuit> expand_layers(const ScheduledCircuit& layer1, int layers) {
    if (layers < 1) throw input_error("layer count must be >= 1");
    std::vector<ScheduledCircuit> out;
    const ScheduledCircuit reversed = reverse_schedule(layer1);
    for (int p = 0; p < layers; ++p) out.push_back(p % 2 == 0 ? layer1 : reversed);
    return out;
}

OverheadReport overhead(const Metrics& compiled, const Metrics& nomap) {
    OverheadReport r;
    auto ratio = [](double a, double b) { return b > 0 ? a / b : 1.0; };
    r.two_qubit_delta = compiled.two_qubit_count - nomap.two_qubit_count;
    r.two_qubit_ratio = ratio(static_cast<double>(compiled.two_qubit_count),
                              static_cast<double>(nomap.two_qubit_count));
    r.two_qubit_depth_delta = compiled.two_qubit_depth - nomap.two_qubit_depth;
    r.two_qubit_depth_ratio = ratio(compiled.two_qubit_depth, nomap.two_qubit_depth);
    r.total_depth_delta = compiled.total_depth - nomap.total_depth;
    r.total_depth_ratio = ratio(compiled.total_depth, nomap.total_depth);
    return r;
}

}  // namespace permuc
