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
#include "permuc/unifier.hpp"

#include <chrono>

namespace permuc {

ScheduleKind parse_schedule(const std::string& name) {
    if (name == "hybrid") return ScheduleKind::hybrid;
    if (name == "generic") return ScheduleKind::generic;
    if (name == "coloring") return ScheduleKind::coloring;
    throw input_error("unknown scheduler \"" + name + "\" (hybrid, generic, coloring)");
}

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

}  // namespace

CompileResult compile(const Hamiltonian& h, const DeviceTopology& topo,
                      const CompileOptions& opt) {
    const auto t_total = std::chrono::steady_clock::now();
    CompileResult res;
    std::tie(res.blocks, res.singles) = unify_terms(h);

    auto t0 = std::chrono::steady_clock::now();
    const FlowMatrix flow = flow_matrix(res.blocks, h.n);
    TabuParams tabu = opt.tabu;
    tabu.seed = sub_seed(opt.seed, pass_id::placement);
    std::tie(res.placement, res.placement_cost) = tabu_place(flow, topo, tabu);
    res.timings.place_ms = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    if (opt.baseline_router) {
        res.routed = baseline_route(res.blocks, res.placement, topo);
    } else {
        res.routed = route(res.blocks, res.placement, topo, opt.seed,
                           opt.want_trace ? &res.trace : nullptr);
        res.routed = dress_swaps(std::move(res.routed), res.blocks);
    }
    res.timings.route_ms = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    switch (opt.schedule) {
        case ScheduleKind::hybrid:
            res.schedule = hybrid_alap(res.routed, res.blocks, res.singles, topo);
            break;
        case ScheduleKind::generic:
            res.schedule = generic_schedule(res.routed, res.blocks, res.singles, topo);
            break;
        case ScheduleKind::coloring:
            if (res.routed.swaps_inserted > 0)
                throw input_error(
                    "the coloring scheduler needs an unconstrained (all-to-all) target; "
                    "routing inserted SWAPs");
            res.schedule = color_schedule(res.blocks, res.singles, res.placement);
            break;
    }
    validate_schedule(res.schedule, res.blocks, topo);
    res.timings.schedule_ms = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    res.metrics = count_hw(res.schedule, res.blocks, opt.gate_set);

    // connectivity-unconstrained reference of the same instance
    const ScheduledCircuit nomap_sc =
        color_schedule(res.blocks, res.singles, QubitMap::identity(h.n, h.n));
    res.nomap = count_hw(nomap_sc, res.blocks, opt.gate_set);
    res.timings.synth_ms = ms_since(t0);

    res.timings.total_ms = ms_since(t_total);
    return res;
}

}  // namespace permuc
