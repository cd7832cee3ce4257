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

#include "permuc/placement.hpp"

#include "permuc/rng.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <deque>
#include <numeric>

namespace permuc {

int FlowMatrix::total() const {
    int s = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) s += at(i, j);
    return s;
}

FlowMatrix flow_matrix(const std::vector<TwoQubitBlock>& blocks, int n) {
    FlowMatrix f(n);
    for (const auto& b : blocks) {
        if (b.pair.first < 0 || b.pair.second >= n)
            throw input_error("block pair out of range for n = " + std::to_string(n));
        f.add(b.pair.first, b.pair.second);
    }
    return f;
}

long qap_cost(const QubitMap& map, const FlowMatrix& f, const DeviceTopology& topo) {
    long cost = 0;
    const int n = f.n();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const int fij = f.at(i, j);
            if (fij) cost += 2L * fij * topo.dist(map.phys(i), map.phys(j));
        }
    return cost;
}

namespace {

/// Greedy seed: BFS over the interaction graph from the highest-degree
/// logical qubit; the first qubit lands on the highest-degree physical
/// qubit, each later one on the free slot minimizing its partial cost.
std::vector<int> greedy_seed(const FlowMatrix& f, const DeviceTopology& topo) {
    const int n = f.n();
    const int m = topo.m();
    std::vector<int> degree(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (j != i && f.at(i, j) > 0) ++degree[i];

    std::vector<int> order;
    std::vector<char> queued(n, false);
    auto push_component = [&](int root) {
        std::deque<int> q{root};
        queued[root] = true;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            order.push_back(v);
            std::vector<int> nbrs;
            for (int w = 0; w < n; ++w)
                if (!queued[w] && f.at(v, w) > 0) nbrs.push_back(w);
            std::sort(nbrs.begin(), nbrs.end(),
                      [&](int a, int b) { return degree[a] != degree[b] ? degree[a] > degree[b] : a < b; });
            for (int w : nbrs) {
                queued[w] = true;
                q.push_back(w);
            }
        }
    };
    for (;;) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!queued[v] && (best < 0 || degree[v] > degree[best])) best = v;
        if (best < 0) break;
        push_component(best);
    }

    std::vector<int> phi(n, -1);
    std::vector<char> used(m, false);
    for (std::size_t k = 0; k < order.size(); ++k) {
        const int l = order[k];
        int best_p = -1;
        long best_score = 0;
        for (int p = 0; p < m; ++p) {
            if (used[p]) continue;
            long score = 0;
            if (k == 0) {
                score = -static_cast<long>(topo.neighbors(p).size());
            } else {
                for (int j = 0; j < n; ++j)
                    if (phi[j] >= 0 && f.at(l, j) > 0)
                        score += static_cast<long>(f.at(l, j)) * topo.dist(p, phi[j]);
            }
            if (best_p < 0 || score < best_score) {
                best_p = p;
                best_score = score;
            }
        }
        phi[l] = best_p;
        used[best_p] = true;
    }
    return phi;
}

struct Search {
    const FlowMatrix& f;
    const DeviceTopology& topo;
    int n;
    int m;
    std::vector<int> phi;     // logical -> physical
    std::vector<int> at;      // physical -> logical, -1 if free
    long cost = 0;

    long full_cost() const {
        long c = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (f.at(i, j)) c += 2L * f.at(i, j) * topo.dist(phi[i], phi[j]);
        return c;
    }

    long delta_swap(int a, int b) const {
        long d = 0;
        const int pa = phi[a];
        const int pb = phi[b];
        for (int k = 0; k < n; ++k) {
            if (k == a || k == b) continue;
            const int fa = f.at(a, k);
            const int fb = f.at(b, k);
            if (fa == fb) continue;
            const int pk = phi[k];
            d += 2L * (fa - fb) * (topo.dist(pb, pk) - topo.dist(pa, pk));
        }
        return d;
    }

    long delta_move(int a, int q) const {
        long d = 0;
        const int pa = phi[a];
        for (int k = 0; k < n; ++k) {
            if (k == a) continue;
            const int fa = f.at(a, k);
            if (!fa) continue;
            d += 2L * fa * (topo.dist(q, phi[k]) - topo.dist(pa, phi[k]));
        }
        return d;
    }

    void do_swap(int a, int b) {
        std::swap(at[phi[a]], at[phi[b]]);
        std::swap(phi[a], phi[b]);
    }

    void do_move(int a, int q) {
        at[phi[a]] = -1;
        at[q] = a;
        phi[a] = q;
    }
};

}  // namespace

std::pair<QubitMap, long> tabu_place(const FlowMatrix& f, const DeviceTopology& topo,
                                     const TabuParams& params) {
    const int n = f.n();
    const int m = topo.m();
    if (n > m)
        throw input_error("device (" + std::to_string(m) + " qubits) smaller than circuit (" +
                          std::to_string(n) + ")");
    if (params.max_iters < 0 || params.tenure < 0 || params.restarts < 1)
        throw input_error("bad Tabu parameters");
    const int max_iters = params.max_iters > 0 ? params.max_iters : 100 * n;
    const int tenure = params.tenure > 0 ? params.tenure : n;

    const auto t0 = std::chrono::steady_clock::now();
    auto out_of_budget = [&] {
        if (!params.time_budget_ms) return false;
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
        return ms >= *params.time_budget_ms;
    };

    std::vector<int> best_phi;
    long best_cost = 0;
    bool have_best = false;

    for (int restart = 0; restart < params.restarts; ++restart) {
        Rng rng(sub_seed(params.seed, static_cast<std::uint64_t>(restart) + 100));
        Search s{f, topo, n, m, {}, std::vector<int>(m, -1)};
        if (restart == 0) {
            s.phi = greedy_seed(f, topo);
        } else {
            std::vector<int> slots(m);
            std::iota(slots.begin(), slots.end(), 0);
            rng.shuffle(slots);
            s.phi.assign(slots.begin(), slots.begin() + n);
        }
        for (int l = 0; l < n; ++l) s.at[s.phi[l]] = l;
        s.cost = s.full_cost();

        // tabu_until[l][p]: iteration until which placing l on p is forbidden
        std::vector<int> tabu_until(static_cast<std::size_t>(n) * m, -1);
        auto is_tabu = [&](int l, int p, int iter) {
            return tabu_until[static_cast<std::size_t>(l) * m + p] >= iter;
        };

        std::vector<int> run_best_phi = s.phi;
        long run_best = s.cost;

        for (int iter = 0; iter < max_iters && !out_of_budget(); ++iter) {
            // Best admissible move; first hit wins on ties, and moves are
            // scanned in (logical, physical) lexicographic order.
            bool found = false;
            bool found_is_swap = true;
            int mv_a = -1, mv_b = -1;
            long mv_delta = 0;

            auto consider = [&](bool is_swap, int a, int b, long delta, bool tabu) {
                if (tabu && s.cost + delta >= run_best) return;  // aspiration
                if (!found || delta < mv_delta) {
                    found = true;
                    found_is_swap = is_swap;
                    mv_a = a;
                    mv_b = b;
                    mv_delta = delta;
                }
            };

            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) {
                    const long delta = s.delta_swap(a, b);
                    const bool tabu =
                        is_tabu(a, s.phi[b], iter) || is_tabu(b, s.phi[a], iter);
                    consider(true, a, b, delta, tabu);
                }
            for (int a = 0; a < n && n < m; ++a)
                for (int q = 0; q < m; ++q) {
                    if (s.at[q] != -1) continue;
                    const long delta = s.delta_move(a, q);
                    consider(false, a, q, delta, is_tabu(a, q, iter));
                }
            if (!found) break;

            if (found_is_swap) {
                tabu_until[static_cast<std::size_t>(mv_a) * m + s.phi[mv_a]] = iter + tenure;
                tabu_until[static_cast<std::size_t>(mv_b) * m + s.phi[mv_b]] = iter + tenure;
                s.do_swap(mv_a, mv_b);
            } else {
                tabu_until[static_cast<std::size_t>(mv_a) * m + s.phi[mv_a]] = iter + tenure;
                s.do_move(mv_a, mv_b);
            }
            s.cost += mv_delta;
#ifndef NDEBUG
            assert(s.cost == s.full_cost() && "delta cost drifted from full recomputation");
#endif
            if (s.cost < run_best) {
                run_best = s.cost;
                run_best_phi = s.phi;
            }
        }

        if (!have_best || run_best < best_cost) {
            have_best = true;
            best_cost = run_best;
            best_phi = run_best_phi;
        }
        if (out_of_budget()) break;
    }

    return {QubitMap(best_phi, m), best_cost};
}

}  // namespace permuc
