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

#include "qunc/bounds.h"

#include <gtest/gtest.h>

#include <cmath>

#include "qunc/chain.h"
#include "qunc/error.h"
#include "qunc/sampling.h"
#include "test_util.h"

using namespace qunc;

namespace {

const double kS2 = 1 / std::sqrt(2.0);
const double kS3 = 1 / std::sqrt(3.0);

std::vector<Observable> paulis(std::initializer_list<const char *> names) {
    std::vector<Observable> out;
    for (const char *n : names) {
        out.push_back(pauli(n));
    }
    return out;
}

// d = 3, x = e0, A1 = A2 = X_01, A3 = A4 = X_02: the inner correlation vanishes.
std::vector<Observable> qutrit_counterexample() {
    ComplexMatrix x01{{0, 1, 0}, {1, 0, 0}, {0, 0, 0}};
    ComplexMatrix x02{{0, 0, 1}, {0, 0, 0}, {1, 0, 0}};
    return {Observable("A1", x01), Observable("A2", x01), Observable("A3", x02), Observable("A4", x02)};
}

double oracle_product(const std::vector<Observable> &obs, const CVector &x) {
    double p = 1;
    for (const auto &a : obs) {
        p *= oracle::oracle_deviation(a.matrix(), x);
    }
    return p;
}

}  // namespace

TEST(robertson, examples) {
    Observable x = pauli("X"), y = pauli("Y"), z = pauli("Z");
    for (double r3 : {-0.7, 0.0, 0.4, 1.0}) {
        EXPECT_NEAR(robertson(x, y, QuantumState::bloch({0, 0, r3})), std::abs(r3), 1e-15);
    }
    Rng rng(1);
    QuantumState s = QuantumState::pure(random_unit_vector(2, rng));
    EXPECT_NEAR(robertson(z, pauli("I"), s), 0, 1e-15);
    EXPECT_NEAR(robertson(x, x, s), 0, 1e-15);
}

TEST(schrodinger, examples) {
    Observable x = pauli("X"), y = pauli("Y"), z = pauli("Z");
    SchrodingerResult r = schrodinger(x, y, QuantumState::bloch({0, 0, 1}));
    EXPECT_NEAR(r.value, 1, 1e-15);
    EXPECT_NEAR(deviation(x, QuantumState::bloch({0, 0, 1})) * deviation(y, QuantumState::bloch({0, 0, 1})), 1,
                1e-15);
    EXPECT_NEAR(schrodinger(x, z, QuantumState::bloch({kS2, 0, kS2})).value, 0.5, 1e-15);

    // Commuting observables on a product-like state with zero means: |<AB>|.
    Observable a("A", ComplexMatrix::diagonal(std::vector<double>{1, -1, 1, -1}));
    Observable b("B", ComplexMatrix::diagonal(std::vector<double>{1, 1, -1, -1}));
    QuantumState s = QuantumState::pure({0.5, 0.5, 0.5, cplx(0, 0.5)});
    EXPECT_NEAR(expectation(a, s), 0, 1e-15);
    EXPECT_NEAR(schrodinger(a, b, s).value, std::abs(pair_moment(a, b, s)), 1e-15);
}

TEST(schrodinger, forms_agree_and_dominate_robertson) {
    Rng rng(2);
    for (int trial = 0; trial < 300; trial++) {
        std::size_t d = 2 + trial % 5;
        auto obs = oracle::random_observables(2, d, rng);
        QuantumState s = trial % 3 == 0 ? QuantumState::density(random_density(d, rng))
                                        : QuantumState::pure(random_unit_vector(d, rng));
        SchrodingerResult r = schrodinger(obs[0], obs[1], s);
        EXPECT_NEAR(r.value, r.radical, 1e-10);
        EXPECT_GE(r.value, r.robertson - 1e-12);
        CorrelationData c = correlations(obs, s);
        EXPECT_NEAR(r.value, std::abs(c.alpha(0, 1)), 1e-12);
    }
}

TEST(robertson_chain, examples) {
    auto xyz = paulis({"X", "Y", "Z"});
    EXPECT_NEAR(robertson_chain(xyz, QuantumState::bloch({kS3, kS3, kS3})), std::pow(3.0, -0.75), 1e-14);
    auto xy = paulis({"X", "Y"});
    QuantumState s = QuantumState::bloch({0.1, 0.2, 0.3});
    EXPECT_NEAR(robertson_chain(xy, s), robertson(xy[0], xy[1], s), 1e-15);
    auto xxy = paulis({"X", "X", "Y"});
    EXPECT_NEAR(robertson_chain(xxy, s), 0, 1e-15);
}

TEST(theorem22, examples) {
    Rng rng(3);
    for (int trial = 0; trial < 50; trial++) {
        auto obs = oracle::random_observables(2, 3, rng);
        QuantumState s = QuantumState::pure(random_unit_vector(3, rng));
        CorrelationData c = correlations(obs, s);
        double expected = 0.5 * (std::abs(c.alpha(0, 1)) + c.deviations[0] * c.deviations[1]);
        EXPECT_NEAR(theorem22(obs, s), expected, 1e-14);
        EXPECT_NEAR(chain_radius_exact(obs, s), expected, 1e-12);
    }
    EXPECT_NEAR(theorem22(paulis({"X", "Y", "Z"}), QuantumState::bloch({kS2, 0, kS2})), 0.5, 1e-12);
    EXPECT_EQ(theorem22(qutrit_counterexample(), QuantumState::pure({1, 0, 0})), 0);
}

TEST(theorem22, odd_chains_equal_radius_even_chains_below) {
    Rng rng(4);
    for (int trial = 0; trial < 200; trial++) {
        std::size_t k = 2 + trial % 6;
        auto obs = oracle::random_observables(k, 2 + trial % 4, rng);
        QuantumState s = QuantumState::pure(random_unit_vector(obs[0].dim(), rng));
        double t22 = theorem22(obs, s);
        double w = chain_radius_exact(obs, s);
        if (k % 2 == 1) {
            EXPECT_NEAR(t22, w, 1e-10);
        } else {
            EXPECT_LE(t22, w + 1e-10);
        }
        EXPECT_NEAR(theorem22_cyclic(correlations(obs, s)), t22, 1e-12);
    }
}

TEST(theorem41, examples) {
    auto xyz = paulis({"X", "Y", "Z"});
    QuantumState s = QuantumState::bloch({kS2, 0, kS2});
    Theorem41Result r = theorem41(xyz[0], xyz[1], xyz[2], s);
    ASSERT_TRUE(r.special.has_value());
    const double x = kS2, y = 0, z = kS2;
    double expected = 0.5 * (std::sqrt((1 - x * x) * (x * x + y * y * z * z)) +
                             std::sqrt((1 - z * z) * (z * z + x * x * y * y)));
    EXPECT_NEAR(*r.special, expected, 1e-14);
    EXPECT_NEAR(*r.special, 0.5, 1e-14);
    EXPECT_NEAR(r.general * r.general, r.general_squared, 1e-14);

    Observable id = pauli("I");
    Theorem41Result zero = theorem41(xyz[0], id, xyz[2], QuantumState::bloch({0.2, 0.1, 0.3}));
    EXPECT_NEAR(zero.general, 0, 1e-15);
    EXPECT_NEAR(zero.special.value_or(0), 0, 1e-15);
}

TEST(theorem41, qutrit_bound_and_relation_to_theorem22) {
    Rng rng(5);
    for (int trial = 0; trial < 100; trial++) {
        auto obs = oracle::random_observables(3, 3, rng);
        CVector x = random_unit_vector(3, rng);
        QuantumState s = QuantumState::pure(x);
        Theorem41Result r = theorem41(obs[0], obs[1], obs[2], s);
        EXPECT_LE(r.general, oracle_product(obs, x) + 1e-9);
        EXPECT_NEAR(r.general, theorem22(obs, s), 1e-10);
        if (r.special) {
            EXPECT_LE(*r.special, oracle_product(obs, x) + 1e-9);
        }
    }
}

TEST(theorem41, special_form_holds_on_mixed_qubits) {
    Rng rng(6);
    for (int trial = 0; trial < 2000; trial++) {
        auto obs = oracle::random_observables(3, 2, rng);
        QuantumState s = QuantumState::bloch(random_bloch_ball(rng));
        Theorem41Result r = theorem41(obs[0], obs[1], obs[2], s);
        ASSERT_TRUE(r.special.has_value());
        EXPECT_LE(*r.special, correlations(obs, s).deviation_product() + 1e-9);
    }
}

TEST(theorem43, examples) {
    auto xyxy = paulis({"X", "Y", "X", "Y"});
    QuantumState s = QuantumState::bloch({0, 0, 1});
    CorrelationData c = correlations(xyxy, s);
    EXPECT_LT(std::abs(c.alpha(1, 2) - cplx(0, -1)), 1e-15);
    EXPECT_LT(std::abs(c.alpha(0, 3) - cplx(0, 1)), 1e-15);
    EXPECT_NEAR(theorem43(xyxy, s), 1, 1e-10);
    EXPECT_NEAR(c.deviation_product(), 1, 1e-10);
    QuantumState up = QuantumState::pure({1, 0});
    EXPECT_NEAR(oracle::oracle_radius(chain_direct(xyxy, up)), 1, 1e-10);

    EXPECT_EQ(theorem43(qutrit_counterexample(), QuantumState::pure({1, 0, 0})), 0);
    EXPECT_THROW(theorem43(paulis({"X", "Y", "Z"}), up), Error);

    Rng rng(7);
    for (int trial = 0; trial < 100; trial++) {
        auto obs = oracle::random_observables(4, 4, rng);
        CVector x = random_unit_vector(4, rng);
        QuantumState st = QuantumState::pure(x);
        EXPECT_LE(theorem43(obs, st), oracle_product(obs, x) + 1e-9);
        EXPECT_EQ(theorem43(obs, st), theorem22(obs, st));
    }
}

TEST(theorem43, xyxy_tight_on_every_pure_qubit) {
    auto xyxy = paulis({"X", "Y", "X", "Y"});
    Rng rng(8);
    for (int trial = 0; trial < 200; trial++) {
        QuantumState s = QuantumState::pure(random_unit_vector(2, rng));
        double product = correlations(xyxy, s).deviation_product();
        EXPECT_NEAR(theorem43(xyxy, s), product, 1e-10);
    }
}

TEST(permutation_max, examples) {
    Rng rng(9);
    auto pair = oracle::random_observables(2, 3, rng);
    QuantumState s = QuantumState::pure(random_unit_vector(3, rng));
    PermutationMax p = permutation_max(pair, s, PermutationEvaluator::RadiusExact);
    std::vector<Observable> swapped = {pair[1], pair[0]};
    EXPECT_NEAR(p.value, chain_radius_exact(pair, s), 1e-12);
    EXPECT_NEAR(p.value, chain_radius_exact(swapped, s), 1e-12);
    EXPECT_EQ(p.permutation, (std::vector<int>{0, 1}));

    auto xyz = paulis({"X", "Y", "Z"});
    double n = std::sqrt(0.81 + 0.01 + 0.09);
    QuantumState tilted = QuantumState::bloch({0.9 / n, 0.1 / n, 0.3 / n});
    PermutationMax q = permutation_max(xyz, tilted, PermutationEvaluator::RadiusExact);
    EXPECT_GE(q.value, chain_radius_exact(xyz, tilted) - 1e-12);
    double brute = 0;
    std::vector<int> order = {0, 1, 2};
    do {
        std::vector<Observable> perm = {xyz[order[0]], xyz[order[1]], xyz[order[2]]};
        brute = std::max(brute, chain_radius_exact(perm, tilted));
    } while (std::next_permutation(order.begin(), order.end()));
    EXPECT_NEAR(q.value, brute, 1e-12);

    Observable a("A", random_hermitian(3, rng));
    std::vector<Observable> same = {a, a, a};
    PermutationMax r = permutation_max(same, s, PermutationEvaluator::Theorem22);
    EXPECT_NEAR(r.value, theorem22(same, s), 1e-15);
    EXPECT_EQ(r.permutation, (std::vector<int>{0, 1, 2}));
}

TEST(permutation_max, cap) {
    std::vector<Observable> nine(9, pauli("X"));
    try {
        permutation_max(nine, QuantumState::pure({1, 0}), PermutationEvaluator::Theorem22);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::TooManyObservables);
    }
}

TEST(norm_based, examples) {
    Rng rng(10);
    auto pair = oracle::random_observables(2, 3, rng);
    QuantumState s = QuantumState::pure(random_unit_vector(3, rng));
    CorrelationData c = correlations(pair, s);
    NormBased nb = norm_based(pair, s);
    EXPECT_NEAR(nb.norm, c.deviations[0] * c.deviations[1], 1e-12);
    EXPECT_NEAR(nb.norm, std::max(std::abs(c.alpha(0, 1)), c.deviations[0] * c.deviations[1]), 1e-12);

    auto zz = paulis({"Z", "Z"});
    EXPECT_NEAR(norm_based(zz, QuantumState::pure({kS2, kS2})).norm, 1, 1e-14);

    NormBased counter = norm_based(qutrit_counterexample(), QuantumState::pure({1, 0, 0}));
    EXPECT_NEAR(counter.norm, 1, 1e-14);
    EXPECT_NEAR(counter.norm_direct, 1, 1e-14);
    EXPECT_EQ(counter.appendix_claim, 0);
    EXPECT_FALSE(counter.claim_holds);
}

TEST(ordering, random_pure_and_mixed) {
    Rng rng(11);
    for (int trial = 0; trial < 300; trial++) {
        std::size_t d = 2 + trial % 4;
        std::size_t k = 2 + (trial / 4) % 5;
        auto obs = oracle::random_observables(k, d, rng);
        QuantumState s = trial % 2 ? QuantumState::density(random_density(d, rng))
                                   : QuantumState::pure(random_unit_vector(d, rng));
        ReportOptions opts;
        opts.permute = true;
        opts.sweep_oracle = trial % 2 == 0;
        BoundReport r = bound_report(obs, s, opts);
        EXPECT_TRUE(r.violations.empty()) << r.violations.front();
        double permuted = r.radius_permuted->value;
        EXPECT_GE(r.deviation_product - permuted, -1e-9);
        EXPECT_GE(permuted - r.radius_exact_id, -1e-9);
        EXPECT_GE(r.radius_exact_id - r.bound_theorem22, -1e-9);
        EXPECT_GE(r.bound_theorem22 - r.bound_robertson_chain, -1e-9);
    }
}

TEST(mixed_states, bounds_equal_lifted_bounds) {
    Rng rng(12);
    for (int trial = 0; trial < 100; trial++) {
        std::size_t d = 2 + trial % 3;
        std::size_t k = 2 + trial % 4;
        auto obs = oracle::random_observables(k, d, rng);
        QuantumState rho = QuantumState::density(random_density(d, rng));
        PureInstance lifted = lift_mixed(obs, rho);
        EXPECT_NEAR(theorem22(obs, rho), theorem22(lifted.observables, lifted.state), 1e-9);
        EXPECT_NEAR(robertson_chain(obs, rho), robertson_chain(lifted.observables, lifted.state), 1e-9);
        EXPECT_NEAR(chain_radius_exact(obs, rho), chain_radius_exact(lifted.observables, lifted.state), 1e-9);
    }
}

TEST(bound_report, pauli_equality_point) {
    auto xyz = paulis({"X", "Y", "Z"});
    BoundReport r = bound_report(xyz, QuantumState::bloch({kS2, 0, kS2}));
    EXPECT_NEAR(r.deviation_product, 0.5, 1e-12);
    EXPECT_NEAR(r.bound_theorem22, 0.5, 1e-12);
    EXPECT_TRUE(r.flags.theorem22_tight);
    EXPECT_TRUE(r.flags.equality);
    EXPECT_TRUE(r.lifted);
    ASSERT_TRUE(r.bound_theorem41.has_value());
    EXPECT_FALSE(r.bound_schrodinger.has_value());
    EXPECT_TRUE(r.violations.empty());
}

TEST(bound_report, pair_structure) {
    Rng rng(13);
    auto pair = oracle::random_observables(2, 3, rng);
    QuantumState s = QuantumState::pure(random_unit_vector(3, rng));
    BoundReport r = bound_report(pair, s);
    CorrelationData c = correlations(pair, s);
    ASSERT_TRUE(r.bound_schrodinger.has_value());
    EXPECT_NEAR(r.bound_schrodinger->value, std::abs(c.alpha(0, 1)), 1e-14);
    EXPECT_NEAR(r.bound_theorem22, 0.5 * (std::abs(c.alpha(0, 1)) + c.deviation_product()), 1e-14);
    ASSERT_TRUE(r.radius_sweep_id.has_value());
    EXPECT_NEAR(*r.radius_sweep_id, r.radius_exact_id, 1e-9);
}

TEST(bound_report, counterexample_is_consistent) {
    BoundReport r = bound_report(qutrit_counterexample(), QuantumState::pure({1, 0, 0}));
    EXPECT_EQ(r.bound_theorem22, 0);
    EXPECT_NEAR(r.radius_exact_id, 1, 1e-12);
    EXPECT_NEAR(r.norm_based.norm, 1, 1e-12);
    EXPECT_NEAR(r.deviation_product, 1, 1e-12);
    EXPECT_TRUE(r.violations.empty());
}

TEST(check_report, detects_violations) {
    auto xy = paulis({"X", "Y"});
    BoundReport r = bound_report(xy, QuantumState::bloch({0, 0, 1}));
    EXPECT_TRUE(check_report(r).empty());
    EXPECT_FALSE(check_report(r, -1).empty());
    r.bound_theorem22 = r.deviation_product + 1;
    EXPECT_FALSE(check_report(r).empty());
}
