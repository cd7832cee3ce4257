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

#include "permuc/topology.hpp"

#include "permuc/types.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

namespace permuc {
namespace {

constexpr int kUnreachable = std::numeric_limits<int>::max() / 4;

std::string describe_components(const std::vector<std::vector<int>>& adj, int m) {
    std::vector<int> comp(m, -1);
    int ncomp = 0;
    for (int s = 0; s < m; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (comp[w] < 0) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
        }
        ++ncomp;
    }
    std::ostringstream os;
    os << ncomp << " components: ";
    for (int c = 0; c < ncomp; ++c) {
        os << (c ? " | {" : "{");
        bool first = true;
        for (int v = 0; v < m; ++v)
            if (comp[v] == c) {
                os << (first ? "" : ",") << v;
                first = false;
            }
        os << "}";
    }
    return os.str();
}

}  // namespace

std::vector<int> all_pairs_distances(const std::vector<std::pair<int, int>>& edges, int m) {
    std::vector<int> d(static_cast<std::size_t>(m) * m, kUnreachable);
    std::vector<std::vector<int>> adj(m);
    for (int v = 0; v < m; ++v) d[static_cast<std::size_t>(v) * m + v] = 0;
    for (auto [a, b] : edges) {
        if (a < 0 || a >= m || b < 0 || b >= m)
            throw input_error("edge endpoint out of range for m = " + std::to_string(m));
        if (a == b) throw input_error("self-loop on qubit " + std::to_string(a));
        d[static_cast<std::size_t>(a) * m + b] = 1;
        d[static_cast<std::size_t>(b) * m + a] = 1;
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (int k = 0; k < m; ++k)
        for (int i = 0; i < m; ++i) {
            const int dik = d[static_cast<std::size_t>(i) * m + k];
            if (dik >= kUnreachable) continue;
            for (int j = 0; j < m; ++j) {
                int& dij = d[static_cast<std::size_t>(i) * m + j];
                const int alt = dik + d[static_cast<std::size_t>(k) * m + j];
                if (alt < dij) dij = alt;
            }
        }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (d[static_cast<std::size_t>(i) * m + j] >= kUnreachable)
                throw input_error("device graph is disconnected; " +
                                  describe_components(adj, m));
    return d;
}

DeviceTopology::DeviceTopology(int m, std::vector<std::pair<int, int>> edges)
    : m_(m), adj_(m) {
    if (m < 2) throw input_error("device needs at least 2 qubits");
    for (auto& e : edges)
        if (e.first > e.second) std::swap(e.first, e.second);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    dist_ = all_pairs_distances(edges_, m_);
    for (auto [a, b] : edges_) {
        adj_[a].push_back(b);
        adj_[b].push_back(a);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

int DeviceTopology::diameter() const {
    int dm = 0;
    for (int v : dist_) dm = std::max(dm, v);
    return dm;
}

DeviceTopology make_grid(int rows, int cols) {
    if (rows < 1 || cols < 1 || rows * cols < 2)
        throw input_error("grid needs rows, cols >= 1 and at least 2 qubits");
    std::vector<std::pair<int, int>> edges;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            const int v = r * cols + c;
            if (c + 1 < cols) edges.emplace_back(v, v + 1);
            if (r + 1 < rows) edges.emplace_back(v, v + cols);
        }
    return {rows * cols, std::move(edges)};
}

DeviceTopology make_line(int n) { return make_grid(1, n); }

DeviceTopology make_all_to_all(int n) {
    if (n < 2) throw input_error("all-to-all device needs n >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
    return {n, std::move(edges)};
}

namespace {

DeviceTopology load_edge_file(const std::string& name) {
    const char* env = std::getenv("PERMUC_DATA_DIR");
    const std::string dir = env ? env : PERMUC_DATA_DIR;
    const std::string path = dir + "/" + name + ".json";
    std::ifstream in(path);
    if (!in) throw input_error("cannot open preset edge list " + path);
    nlohmann::json j;
    in >> j;
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return {j.at("m").get<int>(), std::move(edges)};
}

}  // namespace

DeviceTopology preset(const std::string& name) {
    if (name == "sycamore54" || name == "montreal27" || name == "aspen16")
        return load_edge_file(name);
    if (name.rfind("grid:", 0) == 0) {
        const auto spec = name.substr(5);
        const auto x = spec.find('x');
        if (x == std::string::npos) throw input_error("grid preset must look like grid:RxC");
        try {
            return make_grid(std::stoi(spec.substr(0, x)), std::stoi(spec.substr(x + 1)));
        } catch (const std::logic_error&) {
            throw input_error("bad grid preset \"" + name + "\"");
        }
    }
    if (name.rfind("line:", 0) == 0) {
        try {
            return make_line(std::stoi(name.substr(5)));
        } catch (const std::logic_error&) {
            throw input_error("bad line preset \"" + name + "\"");
        }
    }
    if (name.rfind("all2all:", 0) == 0) {
        try {
            return make_all_to_all(std::stoi(name.substr(8)));
        } catch (const std::logic_error&) {
            throw input_error("bad all2all preset \"" + name + "\"");
        }
    }
    throw input_error("unknown topology preset \"" + name + "\"");
}

}  // namespace permuc
