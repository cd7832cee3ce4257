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

#include "permuc/io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>

namespace permuc {

namespace {

using nlohmann::json;

void reject_unknown(const json& j, std::initializer_list<const char*> allowed,
                    const std::string& where) {
    for (const auto& [key, value] : j.items()) {
        bool ok = false;
        for (const char* a : allowed) ok |= key == a;
        if (!ok) throw input_error("unknown field \"" + key + "\" in " + where);
    }
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw input_error("bad JSON in " + path + ": " + e.what());
    }
    return j;
}

}  // namespace

Hamiltonian hamiltonian_from_json(const json& j) {
    reject_unknown(j, {"n", "time", "steps", "terms"}, "Hamiltonian");
    if (!j.contains("n") || !j.contains("terms"))
        throw input_error("Hamiltonian JSON needs \"n\" and \"terms\"");
    std::vector<PauliTerm> terms;
    for (const auto& t : j.at("terms")) {
        reject_unknown(t, {"paulis", "qubits", "coeff"}, "Hamiltonian term");
        PauliTerm term;
        term.paulis = t.at("paulis").get<std::string>();
        term.qubits = t.at("qubits").get<std::vector<int>>();
        term.coeff = t.at("coeff").get<double>();
        terms.push_back(std::move(term));
    }
    return build_hamiltonian(j.at("n").get<int>(), std::move(terms), j.value("time", 1.0),
                             j.value("steps", 1));
}

json hamiltonian_to_json(const Hamiltonian& h) {
    json terms = json::array();
    for (const auto& t : h.terms)
        terms.push_back({{"paulis", t.paulis}, {"qubits", t.qubits}, {"coeff", t.coeff}});
    return {{"n", h.n}, {"time", h.time}, {"steps", h.steps}, {"terms", terms}};
}

Hamiltonian read_hamiltonian(const std::string& path) {
    return hamiltonian_from_json(load_json(path));
}

DeviceTopology topology_from_json(const json& j) {
    reject_unknown(j, {"m", "edges"}, "topology");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return {j.at("m").get<int>(), std::move(edges)};
}

DeviceTopology resolve_topology(const std::string& arg) {
    if (arg.size() > 5 && arg.substr(arg.size() - 5) == ".json")
        return topology_from_json(load_json(arg));
    return preset(arg);
}

GateSet resolve_gate_set(const std::string& arg) {
    if (arg.size() > 5 && arg.substr(arg.size() - 5) == ".json") {
        const json j = load_json(arg);
        reject_unknown(j, {"name", "generic_cost", "zz_cost"}, "gate-set config");
        GateSet gs = parse_gate_set(j.at("name").get<std::string>());
        gs.generic_cost = j.value("generic_cost", gs.generic_cost);
        gs.zz_cost = j.value("zz_cost", gs.zz_cost);
        if (gs.zz_cost < 0 || gs.zz_cost > gs.generic_cost)
            throw input_error("gate-set config needs 0 <= zz_cost <= generic_cost");
        return gs;
    }
    return parse_gate_set(arg);
}

json schedule_to_json(const ScheduledCircuit& sc) {
    json swaps = json::array();
    for (const auto& s : sc.swaps)
        swaps.push_back({{"phys", {s.phys.first, s.phys.second}},
                         {"logical", {s.logical.first, s.logical.second}},
                         {"dressed", s.dressed},
                         {"merged_block", s.merged_block}});
    json cycles = json::array();
    for (const auto& cyc : sc.cycles) {
        json c = json::array();
        for (const auto& g : cyc)
            c.push_back({{"swap", g.is_swap},
                         {"id", g.id},
                         {"logical", {g.logical.first, g.logical.second}},
                         {"wires", {g.wires.first, g.wires.second}}});
        cycles.push_back(std::move(c));
    }
    json singles = json::array();
    for (std::size_t i = 0; i < sc.singles.size(); ++i)
        singles.push_back({{"qubit", sc.singles[i].qubit},
                           {"cycle", sc.single_cycle[i]},
                           {"wire", sc.single_wire[i]}});
    return {{"n", sc.n},
            {"m", sc.m},
            {"initial_map", sc.initial_map.phi()},
            {"swaps", swaps},
            {"cycles", cycles},
            {"singles", singles}};
}

ScheduledCircuit schedule_from_json(const json& j) {
    reject_unknown(j, {"n", "m", "initial_map", "swaps", "cycles", "singles"}, "schedule");
    ScheduledCircuit sc;
    sc.n = j.at("n").get<int>();
    sc.m = j.at("m").get<int>();
    sc.initial_map = QubitMap(j.at("initial_map").get<std::vector<int>>(), sc.m);
    for (const auto& s : j.at("swaps")) {
        TransitionSwap ts;
        ts.phys = {s.at("phys").at(0).get<int>(), s.at("phys").at(1).get<int>()};
        ts.logical = {s.at("logical").at(0).get<int>(), s.at("logical").at(1).get<int>()};
        ts.dressed = s.at("dressed").get<bool>();
        ts.merged_block = s.at("merged_block").get<int>();
        ts.matrix = swap_matrix();  // dressed matrices are rebuilt on demand
        sc.swaps.push_back(ts);
    }
    for (const auto& cyc : j.at("cycles")) {
        std::vector<SchedGate> cycle;
        for (const auto& g : cyc) {
            SchedGate sg;
            sg.is_swap = g.at("swap").get<bool>();
            sg.id = g.at("id").get<int>();
            sg.logical = {g.at("logical").at(0).get<int>(), g.at("logical").at(1).get<int>()};
            sg.wires = {g.at("wires").at(0).get<int>(), g.at("wires").at(1).get<int>()};
            cycle.push_back(sg);
        }
        sc.cycles.push_back(std::move(cycle));
    }
    for (const auto& s : j.at("singles")) {
        sc.singles.push_back({s.at("qubit").get<int>(), Mat2::Identity()});
        sc.single_cycle.push_back(s.at("cycle").get<int>());
        sc.single_wire.push_back(s.at("wire").get<int>());
    }
    QubitMap m = sc.initial_map;
    for (const auto& cyc : sc.cycles) {
        sc.cycle_maps.push_back(m);
        for (const auto& g : cyc)
            if (g.is_swap) m.apply_physical_swap(sc.swaps[g.id].phys.first,
                                                 sc.swaps[g.id].phys.second);
    }
    sc.final_map = m;
    return sc;
}

ScheduledCircuit read_schedule(const std::string& path) {
    return schedule_from_json(load_json(path));
}

json metrics_to_json(const Metrics& m) {
    return {{"n", m.n},
            {"two_qubit_count", m.two_qubit_count},
            {"two_qubit_depth", m.two_qubit_depth},
            {"total_depth", m.total_depth},
            {"depth_blocks", m.depth_blocks},
            {"swaps", m.swaps},
            {"swaps_dressed", m.swaps_dressed}};
}

json trace_to_json(const std::vector<RouteTraceEntry>& trace) {
    json out = json::array();
    for (const auto& e : trace) {
        json cands = json::array();
        for (const auto& c : e.candidates)
            cands.push_back({{"edge", {c.edge.first, c.edge.second}},
                             {"remaining_cost", c.remaining_cost},
                             {"start_cycle", c.start_cycle},
                             {"dressable", c.dressable}});
        out.push_back({{"block", e.block_id},
                       {"candidates", cands},
                       {"chosen", {e.chosen.first, e.chosen.second}}});
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write " + path);
    out << content;
}

}  // namespace permuc
