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

#include "permuc/synth.hpp"

#include "permuc/rng.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace permuc {

namespace {

constexpr double kPi2 = kPi / 2.0;
constexpr double kPi4 = kPi / 4.0;

double rem_euclid(double x, double m) {
    double r = std::fmod(x, m);
    return r < 0 ? r + m : r;
}

cplx phase_factor(double phi) { return {std::cos(phi), std::sin(phi)}; }

// kron in little-endian slot order: first factor acts on the higher slot.
Mat4 kron(const Mat2& hi, const Mat2& lo) { return Eigen::kroneckerProduct(hi, lo); }

const Mat2 kIPX = (Mat2() << cplx(0, 0), cplx(0, 1), cplx(0, 1), cplx(0, 0)).finished();
const Mat2 kIPY = (Mat2() << cplx(0, 0), cplx(1, 0), cplx(-1, 0), cplx(0, 0)).finished();
const Mat2 kIPZ = (Mat2() << cplx(0, 1), cplx(0, 0), cplx(0, 0), cplx(0, -1)).finished();

Mat4 magic_basis() {
    const double s = 1.0 / std::sqrt(2.0);
    Mat4 b;
    const cplx i{0, 1};
    b << 1, i, 0, 0,
         0, 0, i, 1,
         0, 0, i, -1,
         1, -i, 0, 0;
    return s * b;
}

Mat4 magic_out(const Mat4& u) {
    static const Mat4 b = magic_basis();
    return b.adjoint() * u * b;
}

Mat4 magic_in(const Mat4& u) {
    static const Mat4 b = magic_basis();
    return b * u * b.adjoint();
}

/// Simultaneous diagonalization of a complex-symmetric unitary matrix:
/// m2 = p * diag(d) * p^T with p in SO(4). Real and imaginary parts commute,
/// so a random real mix is diagonalized and checked, retrying on degeneracy.
std::pair<Eigen::Matrix4cd, Eigen::Vector4cd> diagonalize_symmetric(const Mat4& m2) {
    Rng rng(0x5eed5eedULL);
    for (int attempt = 0; attempt < 100; ++attempt) {
        const double wa = attempt == 0 ? 1.0 : rng.uniform_open(-1.0, 1.0);
        const double wb = attempt == 0 ? 0.21827 : rng.uniform_open(-1.0, 1.0);
        const Eigen::Matrix4d mix = wa * m2.real() + wb * m2.imag();
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(mix);
        const Eigen::Matrix4cd p = es.eigenvectors();
        const Eigen::Vector4cd d = (p.transpose() * m2 * p).diagonal();
        if ((p * d.asDiagonal() * p.transpose() - m2).cwiseAbs().maxCoeff() < 1e-11)
            return {p, d};
    }
    throw internal_error("kak: failed to diagonalize the magic-basis Gram matrix");
}

/// Factor a 4x4 kron product k = kron(hi, lo) into its SU(2) parts plus the
/// residual phase: k = exp(i phase) * kron(hi, lo).
std::tuple<Mat2, Mat2, double> factor_kron(const Mat4& k) {
    Mat2 lo;
    lo << k(0, 0), k(0, 1), k(1, 0), k(1, 1);
    cplx det = lo.determinant();
    if (std::abs(det) < 0.1) {
        lo << k(2, 0), k(2, 1), k(3, 0), k(3, 1);
        det = lo.determinant();
    }
    if (std::abs(det) < 0.1) throw internal_error("kak: kron factorization failed (lo part)");
    lo /= std::sqrt(det);
    const Mat4 rest = k * kron(Mat2::Identity(), lo.adjoint());
    Mat2 hi;
    hi << rest(0, 0), rest(0, 2), rest(2, 0), rest(2, 2);
    const cplx det_hi = hi.determinant();
    if (std::abs(det_hi) < 0.9) throw internal_error("kak: kron factorization failed (hi part)");
    hi /= std::sqrt(det_hi);
    return {hi, lo, std::arg(det_hi) / 2.0};
}

double max_abs_diff(const Mat4& a, const Mat4& b) { return (a - b).cwiseAbs().maxCoeff(); }

/// ||u - e^{i phi} v||_max minimized over the global phase phi.
double phase_aligned_dev(const Mat4& u, const Mat4& v) {
    Eigen::Index r = 0, c = 0;
    v.cwiseAbs().maxCoeff(&r, &c);
    cplx align = u(r, c) / v(r, c);
    align /= std::abs(align);
    return max_abs_diff(u, align * v);
}

}  // namespace

int WeylCoords::cnot_class(double tol) const {
    // All-zero elision uses the tighter 1e-12 threshold; class boundaries
    // tolerate ordinary numerical noise.
    if (std::abs(c1) < 1e-12 && std::abs(c2) < 1e-12 && std::abs(c3) < 1e-12) return 0;
    if (std::abs(c1 - kPi4) < tol && std::abs(c2) < tol && std::abs(c3) < tol) return 1;
    if (std::abs(c3) < tol) return 2;
    return 3;
}

Mat4 canonical_gate(double a, double b, double c) {
    const Mat2 x = pauli_matrix('X');
    const Mat2 y = pauli_matrix('Y');
    const Mat2 z = pauli_matrix('Z');
    auto rot = [](const Mat4& p, double t) {
        return Mat4(std::cos(t) * Mat4::Identity() + cplx(0, std::sin(t)) * p);
    };
    return rot(kron(x, x), a) * rot(kron(y, y), b) * rot(kron(z, z), c);
}

KakDecomposition kak_decompose(const Mat4& u) {
    if ((u * u.adjoint() - Mat4::Identity()).cwiseAbs().maxCoeff() > 1e-10)
        throw input_error("kak_decompose: matrix is not unitary");

    const cplx det = u.determinant();
    double phase = std::arg(det) / 4.0;
    const Mat4 su = u * std::pow(det, cplx(-0.25, 0));

    const Mat4 up = magic_out(su);
    const Mat4 m2 = up.transpose() * up;
    auto [p, d] = diagonalize_symmetric(m2);

    Eigen::Vector4d theta;
    for (int i = 0; i < 3; ++i) theta(i) = -std::arg(d(i)) / 2.0;
    theta(3) = -theta(0) - theta(1) - theta(2);
    Eigen::Vector3d cs;
    for (int i = 0; i < 3; ++i) cs(i) = rem_euclid((theta(i) + theta(3)) / 2.0, 2.0 * kPi);

    // order coordinates by their distance to the nearest multiple of pi/2
    std::array<int, 3> order{0, 1, 2};
    Eigen::Vector3d folded;
    for (int i = 0; i < 3; ++i) {
        const double t = rem_euclid(cs(i), kPi2);
        folded(i) = std::min(t, kPi2 - t);
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return folded(a) < folded(b); });
    order = {order[1], order[2], order[0]};
    {
        const Eigen::Vector3d cs0 = cs;
        const Eigen::Vector4d th0 = theta;
        const Eigen::Matrix4cd p0 = p;
        for (int i = 0; i < 3; ++i) {
            cs(i) = cs0(order[i]);
            theta(i) = th0(order[i]);
            p.col(i) = p0.col(order[i]);
        }
    }
    if (p.determinant().real() < 0.0) p.col(3) *= -1.0;

    Eigen::Vector4cd expo;
    for (int i = 0; i < 4; ++i) expo(i) = phase_factor(theta(i));
    Mat4 k1 = up * p * expo.asDiagonal();
    if ((k1.transpose() * k1 - Mat4::Identity()).cwiseAbs().maxCoeff() > 1e-8)
        throw internal_error("kak: left factor is not orthogonal in the magic basis");
    k1 = magic_in(k1);
    Mat4 k2 = p.transpose().conjugate();
    k2 = magic_in(k2);

    auto [k1_hi, k1_lo, ph1] = factor_kron(k1);
    auto [k2_hi, k2_lo, ph2] = factor_kron(k2);
    phase += ph1 + ph2;

    // fold into the canonical chamber, pushing the sign flips into the
    // single-qubit factors
    if (cs(0) > kPi2) {
        cs(0) -= 3.0 * kPi2;
        k1_hi = k1_hi * kIPY;
        k1_lo = k1_lo * kIPY;
        phase += kPi2;
    }
    if (cs(1) > kPi2) {
        cs(1) -= 3.0 * kPi2;
        k1_hi = k1_hi * kIPX;
        k1_lo = k1_lo * kIPX;
        phase += kPi2;
    }
    int conjs = 0;
    if (cs(0) > kPi4) {
        cs(0) = kPi2 - cs(0);
        k1_hi = k1_hi * kIPY;
        k2_lo = kIPY * k2_lo;
        conjs += 1;
        phase -= kPi2;
    }
    if (cs(1) > kPi4) {
        cs(1) = kPi2 - cs(1);
        k1_hi = k1_hi * kIPX;
        k2_lo = kIPX * k2_lo;
        conjs += 1;
        phase += kPi2;
        if (conjs == 1) phase -= kPi;
    }
    if (cs(2) > kPi2) {
        cs(2) -= 3.0 * kPi2;
        k1_hi = k1_hi * kIPZ;
        k1_lo = k1_lo * kIPZ;
        phase += kPi2;
        if (conjs == 1) phase -= kPi;
    }
    if (conjs == 1) {
        cs(2) = kPi2 - cs(2);
        k1_hi = k1_hi * kIPZ;
        k2_lo = kIPZ * k2_lo;
        phase += kPi2;
    }
    if (cs(2) > kPi4) {
        cs(2) -= kPi2;
        k1_hi = k1_hi * kIPZ;
        k1_lo = k1_lo * kIPZ;
        phase -= kPi2;
    }

    // On the c1 = pi/4 face both signs of c3 describe the same local class;
    // pin c3 >= 0 there so equal-coordinate inputs decompose consistently:
    // N(pi/4, b, -c) = (ZX (x) I) N(pi/4, b, c) (XZ (x) I) (i X (x) X).
    if (std::abs(cs(1) - kPi4) < 1e-12 && cs(2) < 0) {
        const Mat2 x = pauli_matrix('X');
        const Mat2 z = pauli_matrix('Z');
        k1_hi = k1_hi * z * x;
        k2_hi = cplx(0, -1) * z * k2_hi;
        k2_lo = x * k2_lo;
        cs(2) = -cs(2);
    }

    KakDecomposition out;
    out.coords = {cs(1), cs(0), cs(2)};
    out.k1_hi = k1_hi;
    out.k1_lo = k1_lo;
    out.k2_hi = k2_hi;
    out.k2_lo = k2_lo;
    out.phase = phase;

    const Mat4 rebuilt = phase_factor(out.phase) * kron(out.k1_hi, out.k1_lo) *
                         canonical_gate(out.coords.c1, out.coords.c2, out.coords.c3) *
                         kron(out.k2_hi, out.k2_lo);
    const double residual = max_abs_diff(rebuilt, u);
    if (residual > 1e-9) {
        std::ostringstream os;
        os << "kak: reconstruction residual " << residual << " exceeds 1e-9";
        throw internal_error(os.str());
    }
    return out;
}

WeylCoords weyl_coordinates(const Mat4& u) { return kak_decompose(u).coords; }

std::array<double, 3> euler_zyz(const Mat2& v) {
    Mat2 su = v;
    const cplx det = su.determinant();
    su /= std::sqrt(det);
    const double a00 = std::abs(su(0, 0));
    const double a10 = std::abs(su(1, 0));
    const double theta = 2.0 * std::atan2(a10, a00);
    double phi, lam;
    if (a10 < 1e-12) {
        phi = 2.0 * std::arg(su(1, 1));
        lam = 0.0;
    } else if (a00 < 1e-12) {
        phi = 2.0 * std::arg(su(1, 0));
        lam = 0.0;
    } else {
        phi = std::arg(su(1, 1)) + std::arg(su(1, 0));
        lam = std::arg(su(1, 1)) - std::arg(su(1, 0));
    }
    return {phi, theta, lam};
}

namespace {

/// One element of a slot-level two-qubit mini circuit: either a CX with a
/// given control slot, or a fused single-qubit run on one slot.
struct MiniGate {
    bool cx = false;
    int control_slot = 0;  // CX
    int slot = 0;          // run
    Mat2 run;
};

struct MiniBuilder {
    std::vector<MiniGate> out;
    std::array<Mat2, 2> pending{Mat2::Identity(), Mat2::Identity()};

    static bool nontrivial(const Mat2& m) {
        return std::abs(m(0, 1)) > 1e-12 || std::abs(m(1, 0)) > 1e-12 ||
               std::abs(m(0, 0) - m(1, 1)) > 1e-12;
    }
    void run(int slot, const Mat2& m) { pending[slot] = m * pending[slot]; }
    void flush(int slot) {
        if (nontrivial(pending[slot])) out.push_back({false, 0, slot, pending[slot]});
        pending[slot] = Mat2::Identity();
    }
    void cx(int control_slot) {
        flush(0);
        flush(1);
        out.push_back({true, control_slot, 0, Mat2::Identity()});
    }
    std::vector<MiniGate> finish() {
        flush(0);
        flush(1);
        return std::move(out);
    }
};

Mat2 rx(double t) { return rot_matrix('X', t); }
Mat2 ry(double t) { return rot_matrix('Y', t); }
Mat2 rz(double t) { return rot_matrix('Z', t); }

/// Two CNOTs cover c3 = 0: conjugating exp(i a XX + i b ZZ) by RX(pi/2) on
/// both slots turns the ZZ factor into YY. Exact, including global phase:
/// N(a,b,0) = (W (x) W) CX (RX(-2a) (x) RZ(-2b)) CX (W+ (x) W+), W = RX(pi/2).
void emit_canonical2(MiniBuilder& mb, double a, double b) {
    const Mat2 w = rx(kPi2);
    mb.run(0, w.adjoint());
    mb.run(1, w.adjoint());
    mb.cx(0);
    mb.run(0, rx(-2.0 * a));
    mb.run(1, rz(-2.0 * b));
    mb.cx(0);
    mb.run(0, w);
    mb.run(1, w);
}

/// Mixed-direction three-CNOT core whose Weyl coordinates are exactly
/// (a, b, c):
///   CX10 (RZ(-2a - pi/2) (x) RY(-2b - pi/2)) CX01 (I (x) RY(2c - pi/2)) CX10
/// (time order rightmost first; the first factor acts on slot 0). Its local
/// factors are recovered by a second Cartan decomposition and cancelled
/// against the target's.
std::vector<MiniGate> canonical3_core(double a, double b, double c) {
    MiniBuilder cb;
    cb.cx(1);
    cb.run(1, ry(2.0 * c - kPi2));
    cb.cx(0);
    cb.run(0, rz(-2.0 * a - kPi2));
    cb.run(1, ry(-2.0 * b - kPi2));
    cb.cx(1);
    return cb.finish();
}

Mat4 mini_product(const std::vector<MiniGate>& items);

std::vector<MiniGate> synth_items(const Mat4& u) {
    const KakDecomposition k = kak_decompose(u);
    const int cls = k.coords.cnot_class();
    MiniBuilder mb;
    if (cls == 0) {
        mb.run(1, k.k2_hi);
        mb.run(0, k.k2_lo);
        mb.run(1, k.k1_hi);
        mb.run(0, k.k1_lo);
    } else if (cls == 2) {
        mb.run(1, k.k2_hi);
        mb.run(0, k.k2_lo);
        emit_canonical2(mb, k.coords.c1, k.coords.c2);
        mb.run(1, k.k1_hi);
        mb.run(0, k.k1_lo);
    } else {
        // core with the same coordinates, locals matched through its kak
        auto agree = [](const WeylCoords& x, const WeylCoords& y) {
            return std::abs(x.c1 - y.c1) < 1e-9 && std::abs(x.c2 - y.c2) < 1e-9 &&
                   std::abs(x.c3 - y.c3) < 1e-9;
        };
        std::vector<MiniGate> core;
        KakDecomposition kv;
        if (cls == 1) {
            MiniBuilder cb;
            cb.cx(0);
            core = cb.finish();
            kv = kak_decompose(mini_product(core));
        } else {
            core = canonical3_core(k.coords.c1, k.coords.c2, k.coords.c3);
            kv = kak_decompose(mini_product(core));
            if (!agree(kv.coords, k.coords)) {
                // the c1 = pi/4 chamber face identifies +-c3; the core can
                // canonicalize to the twin, in which case its mirror matches
                core = canonical3_core(k.coords.c1, k.coords.c2, -k.coords.c3);
                kv = kak_decompose(mini_product(core));
            }
        }
        if (!agree(kv.coords, k.coords))
            throw internal_error("synth: core coordinates do not match the target");
        mb.run(1, Mat2(kv.k2_hi.adjoint() * k.k2_hi));
        mb.run(0, Mat2(kv.k2_lo.adjoint() * k.k2_lo));
        for (const auto& g : core) {
            if (g.cx)
                mb.cx(g.control_slot);
            else
                mb.run(g.slot, g.run);
        }
        mb.run(1, Mat2(k.k1_hi * kv.k1_hi.adjoint()));
        mb.run(0, Mat2(k.k1_lo * kv.k1_lo.adjoint()));
    }
    const auto items = mb.finish();
    const double residual = phase_aligned_dev(mini_product(items), u);
    if (residual > 1e-9) {
        std::ostringstream os;
        os << "synth: residual " << residual << " exceeds 1e-9";
        throw internal_error(os.str());
    }
    return items;
}

Mat4 mini_product(const std::vector<MiniGate>& items) {
    Mat4 u = Mat4::Identity();
    for (const auto& g : items) {
        if (g.cx) {
            Mat4 cx = Mat4::Zero();
            // control slot c: basis states with bit c set get X on the other
            for (int x = 0; x < 4; ++x) {
                const int bc = (x >> g.control_slot) & 1;
                const int y = bc ? x ^ (1 << (1 - g.control_slot)) : x;
                cx(y, x) = 1;
            }
            u = cx * u;
        } else {
            const Mat4 e = g.slot == 0 ? kron(Mat2::Identity(), g.run)
                                       : kron(g.run, Mat2::Identity());
            u = e * u;
        }
    }
    return u;
}

void emit_rot_gates(Circuit& c, int qubit, const Mat2& run) {
    const auto [phi, theta, lam] = euler_zyz(run);
    if (std::abs(lam) > 1e-12) c.gates.push_back(gate::Rot{'Z', lam, qubit});
    if (std::abs(theta) > 1e-12) c.gates.push_back(gate::Rot{'Y', theta, qubit});
    if (std::abs(phi) > 1e-12) c.gates.push_back(gate::Rot{'Z', phi, qubit});
}

}  // namespace

Circuit synth_cnot(const Mat4& u, int q_lo, int q_hi) {
    const auto items = synth_items(u);  // residual-checked inside
    Circuit c;
    c.n = std::max(q_lo, q_hi) + 1;
    const std::array<int, 2> wire{q_lo, q_hi};
    for (const auto& g : items) {
        if (g.cx)
            c.gates.push_back(gate::Basis{BasisGate::CX,
                                          {wire[g.control_slot], wire[1 - g.control_slot]}});
        else
            emit_rot_gates(c, wire[g.slot], g.run);
    }
    return c;
}

GateSet parse_gate_set(const std::string& name) {
    std::string s;
    for (char ch : name) s += static_cast<char>(std::tolower(ch));
    GateSet gs;
    if (s == "cx" || s == "cnot")
        gs.name = BasisGate::CX;
    else if (s == "cz")
        gs.name = BasisGate::CZ;
    else if (s == "syc")
        gs.name = BasisGate::SYC;
    else if (s == "iswap")
        gs.name = BasisGate::ISWAP;
    else
        throw input_error("unknown gate set \"" + name + "\"");
    return gs;
}

namespace {

struct ItemStream {
    HwCircuit hw;
    std::vector<Mat2> pending;
    std::vector<char> dirty;

    explicit ItemStream(int m) : pending(m, Mat2::Identity()), dirty(m, 0) { hw.m = m; }

    void run(int wire, const Mat2& v) {
        pending[wire] = v * pending[wire];
        dirty[wire] = 1;
    }
    void flush(int wire) {
        if (dirty[wire] && MiniBuilder::nontrivial(pending[wire]))
            hw.items.push_back({false, BasisGate::CX, {0, 0}, wire, pending[wire]});
        pending[wire] = Mat2::Identity();
        dirty[wire] = 0;
    }
    void two_qubit(BasisGate b, int a, int t) {
        flush(a);
        flush(t);
        hw.items.push_back({true, b, {a, t}, 0, Mat2::Identity()});
    }
    HwCircuit finish() {
        for (int w = 0; w < hw.m; ++w) flush(w);
        return std::move(hw);
    }
};

Mat2 hadamard() {
    Mat2 h;
    const double s = 1.0 / std::sqrt(2.0);
    h << s, s, s, -s;
    return h;
}

void push_exact(ItemStream& st, const Mat4& u, int wire_lo, int wire_hi, BasisGate basis) {
    const std::array<int, 2> wire{wire_lo, wire_hi};
    for (const auto& g : synth_items(u)) {
        if (g.cx) {
            const int c = wire[g.control_slot];
            const int t = wire[1 - g.control_slot];
            if (basis == BasisGate::CZ) {
                st.run(t, hadamard());
                st.two_qubit(BasisGate::CZ, c, t);
                st.run(t, hadamard());
            } else {
                st.two_qubit(BasisGate::CX, c, t);
            }
        } else {
            st.run(wire[g.slot], g.run);
        }
    }
}

void push_plain_swap(ItemStream& st, int a, int b, BasisGate basis) {
    if (basis == BasisGate::CX || basis == BasisGate::CZ) {
        push_exact(st, swap_matrix(), a, b, basis);
    } else {
        for (int i = 0; i < 3; ++i) st.two_qubit(basis, a, b);
    }
}

int model_cost(const Mat4& u, const GateSet& gs) {
    const auto coords = weyl_coordinates(u);
    const int cls = coords.cnot_class();
    if (cls == 0) return 0;
    if (std::abs(coords.c2) < 1e-9 && std::abs(coords.c3) < 1e-9) return gs.zz_cost;
    return gs.generic_cost;
}

}  // namespace

HwCircuit expand_hw(const ScheduledCircuit& sc, const std::vector<TwoQubitBlock>& blocks,
                    const GateSet& gs) {
    if (gs.zz_cost > gs.generic_cost || gs.zz_cost < 0)
        throw input_error("gate-set model costs must satisfy 0 <= zz_cost <= generic_cost");
    const bool exact = gs.name == BasisGate::CX || gs.name == BasisGate::CZ;
    ItemStream st(sc.m);

    const int total_cycles = sc.total_depth_cycles();
    for (int t = 0; t < total_cycles; ++t) {
        if (t < static_cast<int>(sc.cycles.size()))
            for (const auto& g : sc.cycles[t]) {
                const Mat4& u = g.is_swap ? sc.swaps[g.id].matrix : blocks[g.id].matrix;
                const bool plain_swap = g.is_swap && !sc.swaps[g.id].dressed;
                if (plain_swap) {
                    push_plain_swap(st, g.wires.first, g.wires.second, gs.name);
                } else if (exact) {
                    push_exact(st, u, g.wires.first, g.wires.second, gs.name);
                } else {
                    const int cost = model_cost(u, gs);
                    for (int i = 0; i < cost; ++i)
                        st.two_qubit(gs.name, g.wires.first, g.wires.second);
                }
            }
        for (std::size_t i = 0; i < sc.singles.size(); ++i)
            if (sc.single_cycle[i] == t) st.run(sc.single_wire[i], sc.singles[i].matrix);
    }
    return st.finish();
}

Metrics count_hw(const ScheduledCircuit& sc, const std::vector<TwoQubitBlock>& blocks,
                 const GateSet& gs) {
    const HwCircuit hw = expand_hw(sc, blocks, gs);
    Metrics m;
    m.n = sc.n;
    m.depth_blocks = sc.depth_blocks();
    m.swaps = sc.swaps_inserted();
    m.swaps_dressed = sc.swaps_dressed();

    std::vector<int> avail2(hw.m, 0);
    std::vector<int> avail(hw.m, 0);
    for (const auto& it : hw.items) {
        if (it.two_qubit) {
            ++m.two_qubit_count;
            const int l2 = std::max(avail2[it.wires.first], avail2[it.wires.second]) + 1;
            avail2[it.wires.first] = avail2[it.wires.second] = l2;
            m.two_qubit_depth = std::max(m.two_qubit_depth, l2);
            const int l = std::max(avail[it.wires.first], avail[it.wires.second]) + 1;
            avail[it.wires.first] = avail[it.wires.second] = l;
            m.total_depth = std::max(m.total_depth, l);
        } else {
            const int l = avail[it.wire] + 1;
            avail[it.wire] = l;
            m.total_depth = std::max(m.total_depth, l);
        }
    }
    return m;
}

std::string circuit_text(const HwCircuit& hw, const GateSet& gs) {
    std::ostringstream os;
    os << "# permuc circuit\n";
    os << "# n " << hw.m << "\n";
    os << "# gateset " << basis_name(gs.name) << "\n";
    os.precision(17);
    for (const auto& it : hw.items) {
        if (it.two_qubit) {
            os << basis_name(it.basis) << " " << it.wires.first << " " << it.wires.second << "\n";
        } else {
            const auto [phi, theta, lam] = euler_zyz(it.run);
            if (std::abs(lam) > 1e-12) os << "RZ " << lam << " " << it.wire << "\n";
            if (std::abs(theta) > 1e-12) os << "RY " << theta << " " << it.wire << "\n";
            if (std::abs(phi) > 1e-12) os << "RZ " << phi << " " << it.wire << "\n";
        }
    }
    return os.str();
}

}  // namespace permuc
