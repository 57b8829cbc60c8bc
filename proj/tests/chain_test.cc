// Copyright 2026 The qunc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qunc/chain.h"

#include <gtest/gtest.h>

#include <cmath>

#include "qunc/bounds.h"
#include "qunc/error.h"
#include "qunc/sampling.h"
#include "test_util.h"

using namespace qunc;
using qunc::oracle::oracle_operator_norm;
using qunc::oracle::oracle_radius;
using qunc::oracle::to_eigen;

namespace {

// Product of the commutators [A_j, |x><x|], multiplied with Eigen.
Eigen::MatrixXcd oracle_chain(const std::vector<Observable> &obs, const CVector &x) {
    Eigen::VectorXcd v(x.size());
    for (std::size_t i = 0; i < x.size(); i++) {
        v(i) = x[i];
    }
    Eigen::MatrixXcd p = v * v.adjoint();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(x.size(), x.size());
    for (const auto &a : obs) {
        Eigen::MatrixXcd m = to_eigen(a.matrix());
        out = out * (m * p - p * m);
    }
    return out;
}

struct Case {
    std::vector<Observable> obs;
    QuantumState x;
};

Case random_case(std::size_t d, std::size_t k, Rng &rng) {
    return {oracle::random_observables(k, d, rng), QuantumState::pure(random_unit_vector(d, rng))};
}

}  // namespace

TEST(chain_direct, matches_oracle_product) {
    Rng rng(1);
    for (int trial = 0; trial < 100; trial++) {
        Case c = random_case(2 + trial % 4, 2 + trial % 5, rng);
        ComplexMatrix ours = chain_direct(c.obs, c.x);
        Eigen::MatrixXcd oracle = oracle_chain(c.obs, c.x.vector());
        EXPECT_LT((to_eigen(ours) - oracle).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(chain_direct, examples) {
    std::vector<Observable> zz = {pauli("Z"), pauli("Z")};
    EXPECT_LT(chain_direct(zz, QuantumState::pure({1, 0})).max_abs(), 1e-15);

    std::vector<Observable> xy = {pauli("X"), pauli("Y")};
    EXPECT_NEAR(operator_norm(chain_direct(xy, QuantumState::pure({1, 0}))), 1, 1e-14);

    const double s = 1 / std::sqrt(2.0);
    // Pure state with Bloch vector (1/sqrt2, 0, 1/sqrt2).
    CVector x = {std::cos(std::numbers::pi / 8), std::sin(std::numbers::pi / 8)};
    std::vector<Observable> xyz = {pauli("X"), pauli("Y"), pauli("Z")};
    QuantumState state = QuantumState::pure(x);
    EXPECT_NEAR(expectation(pauli("X"), state), s, 1e-14);
    EXPECT_NEAR(expectation(pauli("Z"), state), s, 1e-14);
    ComplexMatrix d3 = chain_direct(xyz, state);
    EXPECT_NEAR(oracle_radius(d3), 0.5, 1e-10);
    EXPECT_NEAR(radius_exact(effective_matrix(xyz, state)), 0.5, 1e-12);
}

TEST(chain_direct, errors) {
    std::vector<Observable> one = {pauli("X")};
    EXPECT_THROW(chain_direct(one, QuantumState::pure({1, 0})), Error);
    std::vector<Observable> xy = {pauli("X"), pauli("Y")};
    try {
        chain_direct(xy, QuantumState::bloch({0, 0, 0.5}));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidState);
    }
}

TEST(chain_coefficients, k2_and_recurrence) {
    Rng rng(2);
    Case c = random_case(3, 2, rng);
    ChainCoefficients co = chain_coefficients(c.obs, c.x);
    CorrelationData corr = correlations(c.obs, c.x);
    EXPECT_LT(std::abs(co.a + corr.pair(0, 1)), 1e-14);
    EXPECT_LT(std::abs(co.b - corr.means[1]), 1e-14);
    EXPECT_LT(std::abs(co.c - corr.means[0]), 1e-14);
    EXPECT_LT(std::abs(co.d + 1.0), 1e-15);

    for (int trial = 0; trial < 100; trial++) {
        std::size_t k = 2 + trial % 7;
        c = random_case(2 + trial % 4, k, rng);
        co = chain_coefficients(c.obs, c.x);
        corr = correlations(c.obs, c.x);
        if (k % 2 == 1) {
            EXPECT_LT(std::abs(co.d), 1e-12);
        } else {
            // |d_2n| = |alpha_23| |alpha_45| ... (1-based), the inner pairs.
            double expected = 1;
            for (std::size_t j = 1; j + 1 < k; j += 2) {
                expected *= std::abs(corr.alpha(j, j + 1));
            }
            EXPECT_NEAR(std::abs(co.d), expected, 1e-10);
        }
        ComplexMatrix direct = chain_direct(c.obs, c.x);
        EXPECT_LT((direct - reconstruct_chain(co, c.obs, c.x)).max_abs(), 1e-9 * std::max(1.0, direct.max_abs()));
    }
}

TEST(effective_matrix, explicit_k2_k3_entries) {
    Rng rng(3);
    Case c = random_case(4, 2, rng);
    EffectiveMatrix eff = effective_matrix(c.obs, c.x);
    CorrelationData corr = correlations(c.obs, c.x);
    EXPECT_LT(std::abs(eff.at(1, 1) - (corr.means[0] * corr.means[1] - corr.pair(0, 1))), 1e-13);
    EXPECT_LT(std::abs(eff.at(2, 2) + eff.delta_first * std::conj(eff.beta_prime)), 1e-13);
    EXPECT_LT(std::abs(eff.at(2, 3) + eff.delta_first * eff.gamma_prime), 1e-13);
    EXPECT_NEAR(std::norm(eff.beta_prime) + eff.gamma_prime * eff.gamma_prime, corr.deviations[1] * corr.deviations[1],
                1e-9);
    EXPECT_LT(std::abs(eff.beta_prime - corr.alpha(0, 1) / corr.deviations[0]), 1e-12);

    c = random_case(4, 3, rng);
    eff = effective_matrix(c.obs, c.x);
    corr = correlations(c.obs, c.x);
    EXPECT_LT(std::abs(eff.at(1, 1)), 1e-13);
    EXPECT_LT(std::abs(eff.at(2, 1) + corr.alpha(1, 2) * eff.delta_first), 1e-13);
    EXPECT_LT(std::abs(std::abs(eff.at(1, 2)) - std::abs(corr.alpha(0, 1) * eff.beta_prime)), 1e-13);
}

TEST(effective_matrix, pattern_and_first_entry_product) {
    Rng rng(4);
    for (int trial = 0; trial < 200; trial++) {
        std::size_t k = 2 + trial % 7;
        Case c = random_case(2 + trial % 4, k, rng);
        EffectiveMatrix eff = effective_matrix(c.obs, c.x);
        ComplexMatrix direct = chain_direct(c.obs, c.x);
        double norm = operator_norm(direct);
        EXPECT_LE(pattern_defect(eff), 1e-9 * std::max(norm, 1e-6));
        EXPECT_LT((reconstruct_effective(eff) - direct).max_abs(), 1e-12 * std::max(1.0, direct.max_abs()));
        if (k % 2 == 0) {
            CorrelationData corr = correlations(c.obs, c.x);
            double expected = 1;
            for (std::size_t j = 0; j + 1 < k; j += 2) {
                expected *= std::abs(corr.alpha(j, j + 1));
            }
            EXPECT_NEAR(std::abs(eff.at(1, 1)), expected, 1e-10);
        }
    }
}

TEST(effective_matrix, degenerate_first_observable) {
    std::vector<Observable> obs = {pauli("Z"), pauli("X"), pauli("Y")};
    EffectiveMatrix eff = effective_matrix(obs, QuantumState::pure({1, 0}));
    EXPECT_TRUE(eff.degenerate);
    EXPECT_EQ(eff.beta_prime, cplx(0));
    EXPECT_NEAR(eff.gamma_prime, 1, 1e-15);
    EXPECT_EQ(radius_exact(eff), 0);
    EXPECT_EQ(norm_exact(eff).value, 0);
}

TEST(effective_matrix, qubit_frame_has_no_third_direction) {
    std::vector<Observable> xy = {pauli("X"), pauli("Y")};
    EffectiveMatrix eff = effective_matrix(xy, QuantumState::pure({1, 0}));
    EXPECT_EQ(eff.gamma_prime, 0);
    EXPECT_TRUE(eff.z.empty());
}

TEST(lemma_a1, examples) {
    EXPECT_NEAR(lemma_a1_radius(1, 0, 1), 1, 1e-15);
    EXPECT_NEAR(lemma_a1_radius(0, 2, 0), 1, 1e-15);
    EXPECT_NEAR(lemma_a1_radius(3, 4, 1), 2 * std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(oracle_radius(lemma_a1_matrix(3, 4, 1)), 2 * std::sqrt(2.0), 1e-10);
    EXPECT_NEAR(lemma_a1_radius_2x2(3, 1), 2, 1e-15);
}

TEST(lemma_a1, matches_oracle) {
    Rng rng(5);
    for (int trial = 0; trial < 100; trial++) {
        CVector v = random_complex_normal(3, rng);
        EXPECT_NEAR(lemma_a1_radius(v[0], v[1], v[2]), oracle_radius(lemma_a1_matrix(v[0], v[1], v[2])), 1e-8);
        EXPECT_NEAR(lemma_a1_radius_2x2(v[0], v[2]), oracle_radius(lemma_a1_matrix_2x2(v[0], v[2])), 1e-8);
    }
}

TEST(radius_exact, matches_oracle) {
    Rng rng(6);
    for (int trial = 0; trial < 100; trial++) {
        Case c = random_case(2 + trial % 4, 2 + trial % 5, rng);
        double exact = radius_exact(effective_matrix(c.obs, c.x));
        EXPECT_NEAR(exact, oracle_radius(chain_direct(c.obs, c.x)), 1e-8);
    }
}

TEST(radius_exact, phase_invariant) {
    Rng rng(7);
    for (int trial = 0; trial < 20; trial++) {
        Case c = random_case(3, 2 + trial % 5, rng);
        CVector rotated = c.x.vector();
        cplx phase = std::polar(1.0, 0.37 * trial);
        for (auto &z : rotated) {
            z *= phase;
        }
        EXPECT_NEAR(radius_exact(effective_matrix(c.obs, c.x)),
                    radius_exact(effective_matrix(c.obs, QuantumState::pure(rotated))), 1e-12);
    }
}

TEST(radius_exact, pauli_pair_on_z_axis) {
    std::vector<Observable> xy = {pauli("X"), pauli("Y")};
    for (double r3 : {-1.0, -0.4, 0.0, 0.3, 1.0}) {
        EXPECT_NEAR(chain_radius_exact(xy, QuantumState::bloch({0, 0, r3})), 0.5 * (std::abs(r3) + 1), 1e-12);
    }
}

TEST(norm_exact, matches_direct_norm_and_rank) {
    Rng rng(8);
    for (int trial = 0; trial < 200; trial++) {
        Case c = random_case(2 + trial % 5, 2 + trial % 6, rng);
        ComplexMatrix direct = chain_direct(c.obs, c.x);
        double norm = oracle_operator_norm(direct);
        EXPECT_NEAR(norm_exact(effective_matrix(c.obs, c.x)).value, norm, 1e-10);
        auto sv = singular_values(direct);
        if (sv.size() >= 3) {
            EXPECT_LE(sv[2], 1e-9 * norm);
        }
        double product = correlations(c.obs, c.x).deviation_product();
        EXPECT_LE(numerical_radius_sweep(direct), norm + 1e-9);
        EXPECT_LE(norm, product + 1e-9);
    }
}
