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

#pragma once

#include "permuc/pipeline.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace permuc {

/// Hamiltonian JSON:
///   {"n": 4, "time": 1.0, "steps": 1,
///    "terms": [{"paulis": "ZZ", "qubits": [0,1], "coeff": 0.7}, ...]}
/// Unknown fields are rejected.
Hamiltonian hamiltonian_from_json(const nlohmann::json& j);
nlohmann::json hamiltonian_to_json(const Hamiltonian& h);
Hamiltonian read_hamiltonian(const std::string& path);

/// Topology JSON: {"m": 6, "edges": [[0,1], ...]}. Unknown fields rejected.
DeviceTopology topology_from_json(const nlohmann::json& j);

/// Resolves a --topo argument: preset name or a JSON file path.
DeviceTopology resolve_topology(const std::string& arg);

/// Resolves a --gateset argument: a name (cnot, cz, syc, iswap) or a JSON
/// config file {"name": "SYC", "generic_cost": 3, "zz_cost": 2}.
GateSet resolve_gate_set(const std::string& arg);

/// Compiled schedule (cycle table), sufficient together with the
/// Hamiltonian to re-verify the circuit.
nlohmann::json schedule_to_json(const ScheduledCircuit& sc);
ScheduledCircuit schedule_from_json(const nlohmann::json& j);
ScheduledCircuit read_schedule(const std::string& path);

nlohmann::json metrics_to_json(const Metrics& m);
nlohmann::json trace_to_json(const std::vector<RouteTraceEntry>& trace);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace permuc
