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

#include "permuc/rng.hpp"
#include "permuc/topology.hpp"
#include "permuc/types.hpp"

#include <doctest.h>

#include <deque>
#include <numeric>

using namespace permuc;

namespace {

// BFS-from-every-node oracle
std::vector<int> bfs_oracle(const std::vector<std::pair<int, int>>& edges, int m) {
    std::vector<std::vector<int>> adj(m);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<int> d(static_cast<std::size_t>(m) * m, -1);
    for (int s = 0; s < m; ++s) {
        std::deque<int> q{s};
        d[static_cast<std::size_t>(s) * m + s] = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int w : adj[v])
                if (d[static_cast<std::size_t>(s) * m + w] < 0) {
                    d[static_cast<std::size_t>(s) * m + w] =
                        d[static_cast<std::size_t>(s) * m + v] + 1;
                    q.push_back(w);
                }
        }
    }
    return d;
}

std::vector<std::pair<int, int>> random_connected_graph(Rng& rng, int m) {
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < m; ++i)
        edges.emplace_back(order[i], order[rng.below(i)]);  // random spanning tree
    const int extra = static_cast<int>(rng.below(2 * m));
    for (int k = 0; k < extra; ++k) {
        int a = static_cast<int>(rng.below(m));
        int b = static_cast<int>(rng.below(m));
        if (a != b) edges.emplace_back(a, b);
    }
    return edges;
}

}  // namespace

TEST_CASE("grid construction") {
    const DeviceTopology g = make_grid(2, 3);
    CHECK(g.m() == 6);
    CHECK(g.edges().size() == 7);
    CHECK(g.dist(0, 5) == 3);  // opposite corners

    const DeviceTopology line = make_grid(1, 5);
    CHECK(line.dist(0, 4) == 4);

    const DeviceTopology square = make_grid(2, 2);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) CHECK(square.dist(a, b) <= 2);

    CHECK_THROWS_AS(make_grid(0, 3), input_error);
    CHECK_THROWS_AS(make_grid(1, 1), input_error);
}

TEST_CASE("distances on small graphs") {
    const auto path = all_pairs_distances({{0, 1}, {1, 2}}, 3);
    CHECK(path[0 * 3 + 2] == 2);

    const DeviceTopology k4 = make_all_to_all(4);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            CHECK(k4.dist(a, b) == (a == b ? 0 : 1));
}

TEST_CASE("disconnected graphs are rejected with their components") {
    try {
        all_pairs_distances({{0, 1}, {2, 3}}, 4);
        FAIL("expected input_error");
    } catch (const input_error& e) {
        const std::string msg = e.what();
        CHECK(msg.find("disconnected") != std::string::npos);
        CHECK(msg.find("{0,1}") != std::string::npos);
        CHECK(msg.find("{2,3}") != std::string::npos);
    }
}

TEST_CASE("floyd-warshall matches a BFS oracle on random connected graphs") {
    Rng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const int m = 2 + static_cast<int>(rng.below(59));
        const auto edges = random_connected_graph(rng, m);
        CHECK(all_pairs_distances(edges, m) == bfs_oracle(edges, m));
    }
}

TEST_CASE("device presets") {
    const DeviceTopology syc = preset("sycamore54");
    CHECK(syc.m() == 54);
    CHECK(syc.edges().size() == 88);

    const DeviceTopology mtl = preset("montreal27");
    CHECK(mtl.m() == 27);
    CHECK(mtl.edges().size() == 28);

    const DeviceTopology aspen = preset("aspen16");
    CHECK(aspen.m() == 16);
    CHECK(aspen.edges().size() == 18);

    for (const auto* t : {"sycamore54", "montreal27", "aspen16"}) {
        const DeviceTopology d = preset(t);
        for (auto [a, b] : d.edges()) {
            CHECK(a != b);
            CHECK(a < b);  // normalized, no duplicate direction
        }
        int maxdeg = 0;
        for (int v = 0; v < d.m(); ++v)
            maxdeg = std::max(maxdeg, static_cast<int>(d.neighbors(v).size()));
        CHECK(maxdeg <= 4);
    }

    CHECK(preset("grid:2x3").m() == 6);
    CHECK(preset("line:9").m() == 9);
    CHECK(preset("all2all:5").edges().size() == 10);
    CHECK_THROWS_AS(preset("hexagon99"), input_error);
    CHECK_THROWS_AS(preset("grid:x"), input_error);
}
