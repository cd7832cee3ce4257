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

#include "permuc/gates.hpp"
#include "permuc/scheduler.hpp"

#include <string>
#include <vector>

namespace permuc {

/// Canonical Weyl chamber coordinates, pi/4 >= c1 >= c2 >= |c3|.
struct WeylCoords {
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;

    /// Minimal CNOT count of the local-equivalence class: 0, 1, 2 or 3.
    int cnot_class(double tol = 1e-9) const;
};

/// Full Cartan decomposition
///   U = exp(i phase) * (k1_hi (x) k1_lo) * N(c1,c2,c3) * (k2_hi (x) k2_lo)
/// with N(a,b,c) = exp(i (a XX + b YY + c ZZ)); the _hi factor acts on the
/// higher tensor slot.
struct KakDecomposition {
    WeylCoords coords;
    Mat2 k1_hi, k1_lo, k2_hi, k2_lo;
    double phase = 0.0;
};

/// The canonical gate N(a,b,c) = exp(i (a XX + b YY + c ZZ)).
Mat4 canonical_gate(double a, double b, double c);

/// Magic-basis spectral KAK decomposition. Throws input_error if U is not
/// unitary within 1e-10, internal_error if the decomposition fails to
/// reproduce U.
KakDecomposition kak_decompose(const Mat4& u);

WeylCoords weyl_coordinates(const Mat4& u);

/// Exact synthesis of a two-qubit unitary over {CX, Rot} on qubits
/// (q_lo, q_hi), with the Weyl-minimal CNOT count. Reconstruction is checked
/// to 1e-9 up to global phase; a larger residual raises internal_error.
Circuit synth_cnot(const Mat4& u, int q_lo, int q_hi);

inline Circuit synth_cnot(const TwoQubitBlock& b) {
    return synth_cnot(b.matrix, b.pair.first, b.pair.second);
}

/// ZYZ Euler angles (phi, theta, lambda): v ~ RZ(phi) RY(theta) RZ(lambda)
/// up to global phase.
std::array<double, 3> euler_zyz(const Mat2& v);

/// Target hardware gate set. CNOT and CZ are synthesized exactly; SYC and
/// ISWAP use a configurable per-class two-qubit gate count model standing in
/// for external numerical synthesis.
struct GateSet {
    BasisGate name = BasisGate::CX;
    int generic_cost = 3;
    int zz_cost = 2;
};

GateSet parse_gate_set(const std::string& name);

/// Hardware-level expansion of a scheduled circuit: two-qubit basis gates
/// interleaved with fused single-qubit runs (a run is one depth unit).
struct HwCircuit {
    struct Item {
        bool two_qubit = false;
        BasisGate basis = BasisGate::CX;
        std::pair<int, int> wires{0, 0};  // (control, target) for CX/CZ
        int wire = 0;                     // 1q runs
        Mat2 run;
    };
    int m = 0;
    std::vector<Item> items;
};

HwCircuit expand_hw(const ScheduledCircuit& sc, const std::vector<TwoQubitBlock>& blocks,
                    const GateSet& gs);

struct Metrics {
    int n = 0;
    long two_qubit_count = 0;
    int two_qubit_depth = 0;
    int total_depth = 0;
    int depth_blocks = 0;
    int swaps = 0;
    int swaps_dressed = 0;
};

Metrics count_hw(const ScheduledCircuit& sc, const std::vector<TwoQubitBlock>& blocks,
                 const GateSet& gs);

/// One gate per line, e.g. "CX 3 7" / "RZ 0.6 2", preceded by a header
/// naming the qubit count and gate set.
std::string circuit_text(const HwCircuit& hw, const GateSet& gs);

}  // namespace permuc
