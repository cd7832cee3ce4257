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

#include "permuc/pauli.hpp"
#include "permuc/scheduler.hpp"
#include "permuc/synth.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace permuc {

enum class Family {
    nnn_ising,
    nnn_xy,
    nnn_heisenberg,
    qaoa_reg3,
    heisenberg_1d,
    heisenberg_2d,
    heisenberg_3d,
};

Family parse_family(const std::string& name);
const char* family_name(Family f);

struct BenchmarkSpec {
    Family family = Family::nnn_heisenberg;
    int n = 0;
    std::uint64_t seed = 0;
    int layers = 1;  // QAOA p, or Trotter steps
    std::vector<std::pair<double, double>> params;  // explicit (gamma, beta) per QAOA layer
    bool ising_field = true;  // include the per-qubit X field of the Ising model
};

/// Linear-array models with nearest and next-nearest neighbour couplings
/// (2n-3 edges); coefficients drawn uniformly from the open interval
/// (0, pi). Families: nnn_ising (ZZ + optional X field), nnn_xy (XX+YY),
/// nnn_heisenberg (XX+YY+ZZ).
Hamiltonian gen_nnn(Family family, int n, std::uint64_t seed, bool ising_field = true);

/// Heisenberg model on a chain / 2-D grid / 3-D lattice whose shape is the
/// most cube-like factorization of n.
Hamiltonian gen_heisenberg_lattice(Family family, int n, std::uint64_t seed);

/// Generates any single-layer family instance.
Hamiltonian gen_instance(const BenchmarkSpec& spec);

/// One Hamiltonian per QAOA layer on a seeded uniform simple 3-regular
/// graph: gamma_p ZZ per edge plus beta_p X per qubit. Requires even
/// n >= 4.
std::vector<Hamiltonian> gen_qaoa_reg3(int n, std::uint64_t seed, int layers,
                                       const std::vector<std::pair<double, double>>& params = {});

/// Order-preserving baseline router: processes blocks strictly in input
/// order and walks each non-nearest-neighbor pair together along a shortest
/// path; no dressing, dependencies follow the input order.
RoutedProgram baseline_route(const std::vector<TwoQubitBlock>& blocks, const QubitMap& phi0,
                             const DeviceTopology& topo);

/// Reverses the two-qubit gate order of a compiled layer (even-layer form
/// of the multi-layer expansion): cycle structure mirrored, maps rewound.
ScheduledCircuit reverse_schedule(const ScheduledCircuit& sc);

/// Multi-layer expansion: odd layers reuse layer 1, even layers reverse the
/// two-qubit gate order.
std::vector<ScheduledCircuit> expand_layers(const ScheduledCircuit& layer1, int layers);

struct OverheadReport {
    long two_qubit_delta = 0;
    double two_qubit_ratio = 1.0;
    int two_qubit_depth_delta = 0;
    double two_qubit_depth_ratio = 1.0;
    int total_depth_delta = 0;
    double total_depth_ratio = 1.0;
};

/// Absolute and ratio overheads of a compiled circuit against the
/// connectivity-unconstrained baseline of the same instance.
OverheadReport overhead(const Metrics& compiled, const Metrics& nomap);

}  // namespace permuc
