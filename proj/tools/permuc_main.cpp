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
#include "permuc/rng.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

namespace {

using nlohmann::json;
using namespace permuc;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

std::uint64_t env_seed() {
    if (const char* s = std::getenv("PERMUC_SEED")) {
        try {
            return std::stoull(s);
        } catch (const std::logic_error&) {
            throw input_error("PERMUC_SEED is not an unsigned integer");
        }
    }
    return 0;
}

void print_error(const std::string& code, const std::string& message) {
    json err = {{"error", {{"code", code}, {"message", message}}}};
    std::cout << err.dump() << "\n";
}

/// Parses "4", "4,8,12", and "4..10" (QAOA ranges step by 2).
std::vector<int> parse_sizes(const std::string& arg, bool even_only) {
    std::vector<int> out;
    const auto dots = arg.find("..");
    if (dots != std::string::npos) {
        const int lo = std::stoi(arg.substr(0, dots));
        const int hi = std::stoi(arg.substr(dots + 2));
        for (int v = lo; v <= hi; ++v)
            if (!even_only || v % 2 == 0) out.push_back(v);
        return out;
    }
    std::stringstream ss(arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

struct BenchRow {
    std::string family;
    int n = 0;
    std::uint64_t seed = 0;
    bool failed = false;
    std::string error;
    Metrics metrics;
    Metrics nomap;
    PassTimings timings;
};

int cmd_compile(const std::string& ham_path, const std::string& topo_arg,
                const std::string& gateset, const std::string& schedule, std::uint64_t seed,
                const TabuParams& tabu, const std::string& out_dir, bool want_trace,
                bool use_baseline, int layers) {
    const Hamiltonian h = read_hamiltonian(ham_path);
    const DeviceTopology topo = resolve_topology(topo_arg);

    CompileOptions opt;
    opt.schedule = parse_schedule(schedule);
    opt.gate_set = resolve_gate_set(gateset);
    opt.seed = seed;
    opt.tabu = tabu;
    opt.want_trace = want_trace;
    opt.baseline_router = use_baseline;

    const CompileResult res = compile(h, topo, opt);

    json out = {{"metrics", metrics_to_json(res.metrics)},
                {"nomap", metrics_to_json(res.nomap)},
                {"placement_cost", res.placement_cost},
                {"seed", seed},
                {"gateset", basis_name(opt.gate_set.name)},
                {"schedule", schedule}};
    if (layers > 1) {
        const auto expanded = expand_layers(res.schedule, layers);
        long swaps = 0;
        for (const auto& layer : expanded) swaps += layer.swaps_inserted();
        out["layers"] = layers;
        out["layer_swaps_total"] = swaps;
    }

    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        const HwCircuit hw = expand_hw(res.schedule, res.blocks, opt.gate_set);
        write_text_file(out_dir + "/circuit.txt", circuit_text(hw, opt.gate_set));
        write_text_file(out_dir + "/schedule.json", schedule_to_json(res.schedule).dump(1));
        write_text_file(out_dir + "/metrics.json", out.dump(1));
        if (want_trace) {
            json maps = json::array();
            for (const auto& qm : res.routed.maps) maps.push_back(qm.phi());
            const json trace = {{"maps", maps}, {"decisions", trace_to_json(res.trace)}};
            write_text_file(out_dir + "/trace.json", trace.dump(1));
        }
    }
    std::cout << out.dump(1) << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& circuit_path, const std::string& ham_path, int cap) {
    const Hamiltonian h = read_hamiltonian(ham_path);
    const ScheduledCircuit sc = read_schedule(circuit_path);
    const VerifyReport rep = verify_permutation_equivalence(sc, h, cap);
    json out = {{"ok", rep.ok},
                {"max_dev", rep.max_dev},
                {"max_dev_alt", rep.max_dev_alt},
                {"sim_width", rep.sim_width},
                {"emitted_order", rep.emitted_order}};
    if (!rep.problem.empty()) out["problem"] = rep.problem;
    std::cout << out.dump(1) << "\n";
    return rep.ok ? kExitOk : kExitVerifyFailed;
}

int cmd_bench(const std::string& family_arg, const std::string& sizes_arg, int seeds,
              const std::string& topo_arg, const std::string& gateset,
              const std::string& schedule, int layers, const std::string& out_dir, int jobs,
              std::uint64_t seed0, const TabuParams& tabu, bool ising_field) {
    const Family family = parse_family(family_arg);
    const bool qaoa = family == Family::qaoa_reg3;
    const std::vector<int> sizes = parse_sizes(sizes_arg, qaoa);

    struct Job {
        int n;
        std::uint64_t seed;
    };
    std::vector<Job> jobs_list;
    for (int n : sizes)
        for (int s = 0; s < seeds; ++s)
            jobs_list.push_back({n, sub_seed(seed0, (static_cast<std::uint64_t>(n) << 20) + s)});

    std::vector<BenchRow> rows(jobs_list.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= jobs_list.size()) return;
            BenchRow& row = rows[i];
            row.family = family_name(family);
            row.n = jobs_list[i].n;
            row.seed = jobs_list[i].seed;
            try {
                BenchmarkSpec spec;
                spec.family = family;
                spec.n = row.n;
                spec.seed = row.seed;
                spec.layers = layers;
                spec.ising_field = ising_field;
                const Hamiltonian h = gen_instance(spec);
                const DeviceTopology topo = resolve_topology(
                    topo_arg == "all2all" ? "all2all:" + std::to_string(row.n) : topo_arg);
                CompileOptions opt;
                opt.schedule = parse_schedule(schedule);
                opt.gate_set = resolve_gate_set(gateset);
                opt.seed = row.seed;
                opt.tabu = tabu;
                const CompileResult res = compile(h, topo, opt);
                row.metrics = res.metrics;
                row.nomap = res.nomap;
                row.timings = res.timings;
                if (layers > 1) {
                    const auto expanded = expand_layers(res.schedule, layers);
                    row.metrics.swaps = 0;
                    row.metrics.swaps_dressed = 0;
                    for (const auto& layer : expanded) {
                        row.metrics.swaps += layer.swaps_inserted();
                        row.metrics.swaps_dressed += layer.swaps_dressed();
                    }
                }
            } catch (const std::exception& e) {
                row.failed = true;
                row.error = e.what();
            }
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::ostringstream csv;
    csv << "family,n,seed,swaps,swaps_dressed,two_qubit_count,two_qubit_depth,total_depth,"
           "nomap_two_qubit_count,nomap_two_qubit_depth,nomap_total_depth,"
           "runtime_ms_placement,runtime_ms_routing,runtime_ms_scheduling,runtime_ms_synth,"
           "error\n";
    bool any_failed = false;
    for (const auto& r : rows) {
        any_failed |= r.failed;
        csv << r.family << "," << r.n << "," << r.seed << ",";
        if (r.failed) {
            csv << ",,,,,,,,,,,\"" << r.error << "\"\n";
            continue;
        }
        csv << r.metrics.swaps << "," << r.metrics.swaps_dressed << ","
            << r.metrics.two_qubit_count << "," << r.metrics.two_qubit_depth << ","
            << r.metrics.total_depth << "," << r.nomap.two_qubit_count << ","
            << r.nomap.two_qubit_depth << "," << r.nomap.total_depth << ","
            << r.timings.place_ms << "," << r.timings.route_ms << "," << r.timings.schedule_ms
            << "," << r.timings.synth_ms << ",\n";
    }
    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        write_text_file(out_dir + "/bench.csv", csv.str());

        // per-size aggregate: mean and standard deviation over seeds
        std::ostringstream agg;
        agg << "family,n,instances,swaps_mean,swaps_std,two_qubit_mean,two_qubit_std,"
               "two_qubit_depth_mean,two_qubit_depth_std,total_depth_mean,total_depth_std\n";
        for (int n : sizes) {
            std::vector<const BenchRow*> group;
            for (const auto& r : rows)
                if (r.n == n && !r.failed) group.push_back(&r);
            if (group.empty()) continue;
            auto stats = [&](auto get) {
                double mean = 0, var = 0;
                for (const auto* r : group) mean += get(*r);
                mean /= static_cast<double>(group.size());
                for (const auto* r : group) {
                    const double d = get(*r) - mean;
                    var += d * d;
                }
                var /= static_cast<double>(group.size());
                return std::pair{mean, std::sqrt(var)};
            };
            const auto sw = stats([](const BenchRow& r) { return double(r.metrics.swaps); });
            const auto tq =
                stats([](const BenchRow& r) { return double(r.metrics.two_qubit_count); });
            const auto td =
                stats([](const BenchRow& r) { return double(r.metrics.two_qubit_depth); });
            const auto tt = stats([](const BenchRow& r) { return double(r.metrics.total_depth); });
            agg << family_name(family) << "," << n << "," << group.size() << "," << sw.first
                << "," << sw.second << "," << tq.first << "," << tq.second << "," << td.first
                << "," << td.second << "," << tt.first << "," << tt.second << "\n";
        }
        write_text_file(out_dir + "/summary.csv", agg.str());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].failed) continue;
            json j = {{"family", rows[i].family},
                      {"n", rows[i].n},
                      {"seed", rows[i].seed},
                      {"metrics", metrics_to_json(rows[i].metrics)},
                      {"nomap", metrics_to_json(rows[i].nomap)}};
            std::ostringstream name;
            name << out_dir << "/" << rows[i].family << "_n" << rows[i].n << "_i" << i << ".json";
            write_text_file(name.str(), j.dump(1));
        }
    }
    std::cout << csv.str();
    return any_failed ? kExitVerifyFailed : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"permuc: permutation-aware compiler for 2-local Hamiltonian simulation"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    bool seed_set = false;
    app.add_flag_callback("--version", [] {
        std::cout << "permuc 0.1.0\n";
        std::exit(0);
    });

    TabuParams tabu;
    std::string ham_path, topo_arg = "all2all", gateset = "cnot", schedule = "hybrid";
    std::string out_dir;
    bool want_trace = false, use_baseline = false;
    int layers = 1;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", seed, "global seed (fallback: PERMUC_SEED)")
            ->each([&](const std::string&) { seed_set = true; });
        sub->add_option("--placement-iters", tabu.max_iters, "Tabu iterations (default 100n)");
        sub->add_option("--placement-tenure", tabu.tenure, "Tabu tenure (default n)");
        sub->add_option("--placement-restarts", tabu.restarts, "Tabu restarts");
    };

    auto* compile_cmd = app.add_subcommand("compile", "compile one Hamiltonian");
    compile_cmd->add_option("--ham", ham_path, "Hamiltonian JSON file")->required();
    compile_cmd->add_option("--topo", topo_arg, "topology preset or JSON file")->required();
    compile_cmd->add_option("--gateset", gateset, "cnot | cz | syc | iswap");
    compile_cmd->add_option("--schedule", schedule, "hybrid | generic | coloring");
    compile_cmd->add_option("--out", out_dir, "output directory");
    compile_cmd->add_option("--layers", layers, "multi-layer expansion");
    compile_cmd->add_flag("--trace", want_trace, "emit routing trace JSON");
    compile_cmd->add_flag("--baseline-router", use_baseline, "order-preserving baseline router");
    add_common(compile_cmd);

    std::string circuit_path;
    int cap = 12;
    auto* verify_cmd = app.add_subcommand("verify", "verify a compiled schedule");
    verify_cmd->add_option("--circuit", circuit_path, "schedule JSON from compile --out")
        ->required();
    verify_cmd->add_option("--ham", ham_path, "Hamiltonian JSON file")->required();
    verify_cmd->add_option("--cap", cap, "dense-simulation qubit cap (default 12)");

    std::string family_arg = "nnn-heisenberg", sizes_arg = "6";
    int seeds = 10, jobs = 1;
    auto* bench_cmd = app.add_subcommand("bench", "run a benchmark matrix");
    bench_cmd->add_option("--family", family_arg, "benchmark family");
    bench_cmd->add_option("--n", sizes_arg, "sizes: \"30\", \"6,10\", \"4..22\"");
    bench_cmd->add_option("--seeds", seeds, "instances per size");
    bench_cmd->add_option("--topo", topo_arg, "topology preset, JSON file, or all2all");
    bench_cmd->add_option("--gateset", gateset, "cnot | cz | syc | iswap");
    bench_cmd->add_option("--schedule", schedule, "hybrid | generic | coloring");
    bench_cmd->add_option("--layers", layers, "QAOA layers / Trotter steps");
    bench_cmd->add_option("--out", out_dir, "output directory");
    bench_cmd->add_option("--jobs", jobs, "parallel instances");
    bool no_ising_field = false;
    bench_cmd->add_flag("--no-ising-field", no_ising_field,
                        "drop the per-qubit X terms of the Ising model");
    add_common(bench_cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        if (!seed_set) seed = env_seed();
        if (compile_cmd->parsed())
            return cmd_compile(ham_path, topo_arg, gateset, schedule, seed, tabu, out_dir,
                               want_trace, use_baseline, layers);
        if (verify_cmd->parsed()) return cmd_verify(circuit_path, ham_path, cap);
        if (bench_cmd->parsed())
            return cmd_bench(family_arg, sizes_arg, seeds, topo_arg, gateset, schedule, layers,
                             out_dir, jobs, seed, tabu, !no_ising_field);
    } catch (const input_error& e) {
        print_error("input", e.what());
        return kExitInput;
    } catch (const internal_error& e) {
        print_error("internal", e.what());
        return kExitInternal;
    } catch (const std::exception& e) {
        print_error("internal", e.what());
        return kExitInternal;
    }
    return kExitOk;
}
