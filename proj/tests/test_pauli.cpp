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

#include "permuc/block.hpp"
#include "permuc/rng.hpp"

#include <doctest.h>

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

using namespace permuc;

namespace {

// independent scaling-and-squaring oracle for exp(i t H)
Mat4 expm_oracle(const Mat4& h, double t) { return Mat4(cplx(0, t) * h).exp(); }

Mat4 pauli_sum(double a, double b, double c) {
    const Mat2 x = pauli_matrix('X');
    const Mat2 y = pauli_matrix('Y');
    const Mat2 z = pauli_matrix('Z');
    return a * Eigen::kroneckerProduct(x, x) + b * Eigen::kroneckerProduct(y, y) +
           c * Eigen::kroneckerProduct(z, z);
}

}  // namespace

TEST_CASE("build_hamiltonian validates and exposes the interaction graph") {
    const Hamiltonian h = build_hamiltonian(2, {{"ZZ", {0, 1}, 0.6}}, 1.0, 1);
    CHECK(h.interaction_edges().size() == 1);

    // next-nearest-neighbour chain on 6 qubits has 2n-3 = 9 edges
    std::vector<PauliTerm> terms;
    for (int i = 0; i + 1 < 6; ++i) terms.push_back({"ZZ", {i, i + 1}, 1.0});
    for (int i = 0; i + 2 < 6; ++i) terms.push_back({"ZZ", {i, i + 2}, 1.0});
    CHECK(build_hamiltonian(6, terms, 1.0, 1).interaction_edges().size() == 9);

    CHECK_THROWS_AS(build_hamiltonian(4, {{"XY", {3, 3}, 1.0}}, 1.0, 1), input_error);
    CHECK_THROWS_AS(build_hamiltonian(2, {{"ZZ", {0, 5}, 1.0}}, 1.0, 1), input_error);
    CHECK_THROWS_AS(build_hamiltonian(2, {{"ZA", {0, 1}, 1.0}}, 1.0, 1), input_error);
    CHECK_THROWS_AS(build_hamiltonian(1, {}, 1.0, 1), input_error);
}

TEST_CASE("block_matrix basics") {
    CHECK((block_matrix({{"ZZ", {0, 1}, 0.4}}, 0.0) - Mat4::Identity()).cwiseAbs().maxCoeff() <
          1e-15);

    const double theta = 0.37;
    const Mat4 zz = block_matrix({{"ZZ", {0, 1}, theta}}, 1.0);
    const cplx p = std::exp(cplx(0, theta));
    CHECK(std::abs(zz(0, 0) - p) < 1e-15);
    CHECK(std::abs(zz(1, 1) - std::conj(p)) < 1e-15);
    CHECK(std::abs(zz(2, 2) - std::conj(p)) < 1e-15);
    CHECK(std::abs(zz(3, 3) - p) < 1e-15);

    CHECK_THROWS_AS(block_matrix({{"ZZ", {0, 1}, 1.0}, {"ZZ", {1, 2}, 1.0}}, 1.0), input_error);
}

TEST_CASE("heisenberg block agrees with the matrix exponential oracle") {
    const double w = kPi / 4;
    const Mat4 got =
        block_matrix({{"XX", {0, 1}, w}, {"YY", {0, 1}, w}, {"ZZ", {0, 1}, w}}, 1.0);
    const Mat4 want = expm_oracle(pauli_sum(w, w, w), 1.0);
    CHECK((got - want).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("commuting same-pair exponential product equals exp of the sum") {
    Rng rng(2026);
    for (int i = 0; i < 1000; ++i) {
        const double a = rng.uniform_open(0, kPi);
        const double b = rng.uniform_open(0, kPi);
        const double c = rng.uniform_open(0, kPi);
        const double t = rng.uniform_open(-2, 2);
        const Mat4 got =
            block_matrix({{"XX", {0, 1}, a}, {"YY", {0, 1}, b}, {"ZZ", {0, 1}, c}}, t);
        const Mat4 want = expm_oracle(pauli_sum(a, b, c), t);
        REQUIRE((got - want).cwiseAbs().maxCoeff() < 1e-10);
        REQUIRE((got * got.adjoint() - Mat4::Identity()).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("unify_terms partitions the two-qubit terms") {
    std::vector<PauliTerm> terms;
    for (int i = 0; i + 1 < 6; ++i) terms.push_back({"ZZ", {i, i + 1}, 0.3});
    for (int i = 0; i + 2 < 6; ++i) terms.push_back({"XX", {i, i + 2}, 0.2});
    terms.push_back({"YY", {0, 1}, 0.9});  // same pair as the first term
    terms.push_back({"X", {2}, 0.5});
    const Hamiltonian h = build_hamiltonian(6, terms, 1.0, 1);

    const auto [blocks, singles] = unify_terms(h);
    CHECK(blocks.size() == h.interaction_edges().size());
    CHECK(singles.size() == 1);
    std::size_t total_terms = 0;
    for (const auto& b : blocks) {
        total_terms += b.terms.size();
        for (const auto& t : b.terms) {
            const std::pair<int, int> e = std::minmax(t.qubits[0], t.qubits[1]);
            CHECK(e == b.pair);
        }
    }
    CHECK(total_terms + singles.size() == terms.size());
}

TEST_CASE("unify_terms on a Hamiltonian with no two-qubit terms") {
    const Hamiltonian h = build_hamiltonian(3, {{"X", {0}, 0.4}, {"Z", {2}, 0.1}}, 1.0, 1);
    const auto [blocks, singles] = unify_terms(h);
    CHECK(blocks.empty());
    CHECK(singles.size() == 2);
}

TEST_CASE("30-qubit chain unifies to 29 blocks") {
    std::vector<PauliTerm> terms;
    for (int i = 0; i + 1 < 30; ++i) {
        terms.push_back({"XX", {i, i + 1}, 0.3});
        terms.push_back({"YY", {i, i + 1}, 0.4});
        terms.push_back({"ZZ", {i, i + 1}, 0.5});
    }
    const auto [blocks, singles] = unify_terms(build_hamiltonian(30, terms, 1.0, 1));
    CHECK(blocks.size() == 29);
    CHECK(singles.empty());
}
