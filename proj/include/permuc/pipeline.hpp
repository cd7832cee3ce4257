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

#include "permuc/benchgen.hpp"
#include "permuc/placement.hpp"
#include "permuc/simcheck.hpp"

#include <string>

namespace permuc {

enum class ScheduleKind { hybrid, generic, coloring };

ScheduleKind parse_schedule(const std::string& name);

struct CompileOptions {
    ScheduleKind schedule = ScheduleKind::hybrid;
    GateSet gate_set;
    std::uint64_t seed = 0;
    TabuParams tabu;     // seed is derived from the global seed
    bool want_trace = false;
    bool baseline_router = false;  // order-preserving baseline instead of Algorithm 1
};

struct PassTimings {
    double place_ms = 0;
    double route_ms = 0;
    double schedule_ms = 0;
    double synth_ms = 0;
    double total_ms = 0;
};

struct CompileResult {
    std::vector<TwoQubitBlock> blocks;
    std::vector<SingleQubitOp> singles;
    QubitMap placement;
    long placement_cost = 0;
    RoutedProgram routed;
    ScheduledCircuit schedule;
    Metrics metrics;
    Metrics nomap;
    std::vector<RouteTraceEntry> trace;
    PassTimings timings;
};

/// Full pipeline: unify terms, place (Tabu QAP), route (permutation-aware),
/// dress SWAPs, schedule, count hardware gates. The schedule always passes
/// forward replay before being returned.
CompileResult compile(const Hamiltonian& h, const DeviceTopology& topo,
                      const CompileOptions& opt);

}  // namespace permuc
