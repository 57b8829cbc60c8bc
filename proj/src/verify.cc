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

#include "qunc/verify.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "qunc/bounds.h"
#include "qunc/chain.h"
#include "qunc/linalg.h"

namespace qunc {

namespace {

double relative_to(double value, double scale) {
    return value / std::max(1.0, scale);
}

}  // namespace

RandomInstance random_instance(std::size_t d, std::size_t k, bool mixed, Rng &rng) {
    std::vector<Observable> obs;
    obs.reserve(k);
    for (std::size_t j = 0; j < k; j++) {
        obs.emplace_back("A" + std::to_string(j + 1), random_hermitian(d, rng));
    }
    if (mixed) {
        return {std::move(obs), QuantumState::density(random_density(d, rng))};
    }
    return {std::move(obs), QuantumState::pure(random_unit_vector(d, rng))};
}

SuiteReport properties_suite(const PropertiesConfig &cfg) {
    Rng rng(cfg.seed);
    std::vector<CheckAccumulator> checks;
    checks.reserve(32);
    auto add = [&](const std::string &name, double tolerance) -> CheckAccumulator & {
        checks.emplace_back(name, cfg.tolerance_override.value_or(tolerance));
        return checks.back();
    };

    auto &lemma_norm = add("lemma21_deviation_eq_norm", 1e-9);
    auto &lemma_radius = add("lemma21_deviation_eq_radius", 1e-9);
    auto &skew = add("commutator_skew_hermitian", 1e-12);
    auto &form = add("covariance_forms_agree", 1e-10);
    auto &robertson_le = add("covariance_ge_half_commutator", 1e-12);
    auto &cauchy = add("cauchy_schwarz", 1e-9);
    auto &recon = add("chain_reconstruction", 1e-9);
    auto &frame = add("effective_frame_reconstruction", 1e-9);
    auto &pattern = add("parity_pattern", 1e-9);
    auto &oracle = add("radius_closed_form_eq_sweep", 1e-8);
    auto &norm_pattern = add("norm_closed_form_eq_direct", 1e-9);
    auto &rank = add("chain_rank_le_2", 1e-9);
    auto &norm_chain = add("radius_le_norm_le_product", 1e-9);
    auto &order_pure = add("ordering_pure", 1e-9);
    auto &order_mixed = add("ordering_mixed", 1e-9);
    auto &lift_moments = add("lift_moments_invariant", 1e-9);
    auto &lift_bounds = add("lift_bounds_invariant", 1e-9);
    auto &k2 = add("theorem22_k2_closed_form", 1e-12);
    auto &k3 = add("theorem41_general_eq_theorem22", 1e-10);
    auto &k4 = add("theorem43_eq_theorem22", 1e-12);
    auto &lemma_a1 = add("lemma_a1_eq_sweep", 1e-8);
    auto &two_sided = add("radius_two_sided_bound", 1e-9);
    auto &hermitian = add("radius_eq_norm_hermitian", 1e-9);

    for (std::size_t i = 0; i < cfg.samples; i++) {
        // Single observable facts.
        {
            std::size_t d = 2 + i % 5;
            Observable a("A", random_hermitian(d, rng));
            QuantumState x = QuantumState::pure(random_unit_vector(d, rng));
            double delta = deviation(a, x);
            ComplexMatrix c = commutator_with_projector(a.matrix(), x.vector());
            lemma_norm.record(std::abs(delta - operator_norm(c)));
            lemma_radius.record(std::abs(delta - numerical_radius_sweep(c)));
            skew.record((c + c.adjoint()).max_abs());
        }

        // Pairs.
        {
            std::size_t d = 2 + i % 4;
            RandomInstance inst = random_instance(d, 2, i % 2 == 1, rng);
            SchrodingerResult sr = schrodinger(inst.observables[0], inst.observables[1], inst.state);
            form.record(std::abs(sr.value - sr.radical));
            robertson_le.record_ge(sr.value, sr.robertson);
            robertson_le.record_ge(sr.radical, sr.robertson);
            CorrelationData corr = correlations(inst.observables, inst.state);
            cauchy.record_ge(corr.deviations[0] * corr.deviations[1], std::abs(corr.alpha(0, 1)));
            k2.record(std::abs(
                theorem22(corr) - 0.5 * (std::abs(corr.alpha(0, 1)) + corr.deviations[0] * corr.deviations[1])));
        }

        // Chains on pure states.
        {
            std::size_t d = 2 + i % 4;
            std::size_t k = 2 + (i / 4) % 5;
            RandomInstance inst = random_instance(d, k, false, rng);
            ComplexMatrix direct = chain_direct(inst.observables, inst.state);
            double scale = direct.max_abs();
            ChainCoefficients co = chain_coefficients(inst.observables, inst.state);
            recon.record(relative_to((direct - reconstruct_chain(co, inst.observables, inst.state)).max_abs(), scale));
            EffectiveMatrix eff = effective_matrix(inst.observables, inst.state);
            frame.record(relative_to((direct - reconstruct_effective(eff)).max_abs(), scale));
            double opnorm = operator_norm(direct);
            pattern.record(pattern_defect(eff) / std::max(opnorm, 1e-6));
            double sweep = numerical_radius_sweep(direct);
            double exact = radius_exact(eff);
            oracle.record(std::abs(sweep - exact));
            norm_pattern.record(std::abs(norm_exact(eff).value - opnorm));
            std::vector<double> sv = singular_values(direct);
            if (sv.size() >= 3 && opnorm > 1e-12) {
                rank.record(sv[2] / opnorm);
            }
            CorrelationData corr = correlations(inst.observables, inst.state);
            double product = corr.deviation_product();
            norm_chain.record_ge(opnorm, sweep);
            norm_chain.record_ge(product, opnorm);

            PermutationMax perm = permutation_max(inst.observables, inst.state, PermutationEvaluator::RadiusExact);
            double t22 = theorem22(corr);
            double chained = robertson_chain(corr);
            order_pure.record_ge(product, perm.value);
            order_pure.record_ge(perm.value, exact);
            order_pure.record_ge(exact, t22);
            order_pure.record_ge(t22, chained);
            if (k == 3) {
                Theorem41Result r = theorem41(inst.observables[0], inst.observables[1], inst.observables[2], inst.state);
                k3.record(std::abs(r.general - t22));
            }
            if (k == 4) {
                k4.record(std::abs(theorem43(inst.observables, inst.state) - t22));
            }
        }

        // Chains on mixed states, through the purification.
        {
            std::size_t d = 2 + i % 3;
            std::size_t k = 2 + (i / 3) % 5;
            RandomInstance inst = random_instance(d, k, true, rng);
            PureInstance lifted = lift_mixed(inst.observables, inst.state);
            CorrelationData direct = correlations(inst.observables, inst.state);
            CorrelationData via = correlations(lifted.observables, lifted.state);
            for (std::size_t a = 0; a < k; a++) {
                lift_moments.record(std::abs(direct.means[a] - via.means[a]));
                lift_moments.record(std::abs(direct.deviations[a] - via.deviations[a]));
                for (std::size_t b = 0; b < k; b++) {
                    lift_moments.record(std::abs(direct.pair(a, b) - via.pair(a, b)));
                }
            }
            lift_bounds.record(std::abs(theorem22(direct) - theorem22(via)));
            lift_bounds.record(std::abs(robertson_chain(direct) - robertson_chain(via)));

            double product = direct.deviation_product();
            double exact = chain_radius_exact(lifted.observables, lifted.state);
            PermutationMax perm = permutation_max(lifted.observables, lifted.state, PermutationEvaluator::RadiusExact);
            double t22 = theorem22(direct);
            order_mixed.record_ge(product, perm.value);
            order_mixed.record_ge(perm.value, exact);
            order_mixed.record_ge(exact, t22);
            order_mixed.record_ge(t22, robertson_chain(direct));
        }

        // The 3x3 radius formula and generic radius bounds.
        {
            cplx a = random_complex_normal(1, rng)[0];
            cplx b = random_complex_normal(1, rng)[0];
            cplx c = random_complex_normal(1, rng)[0];
            lemma_a1.record(std::abs(lemma_a1_radius(a, b, c) - numerical_radius_sweep(lemma_a1_matrix(a, b, c))));
            lemma_a1.record(std::abs(lemma_a1_radius_2x2(a, c) - numerical_radius_sweep(lemma_a1_matrix_2x2(a, c))));

            std::size_t d = 1 + i % 8;
            CVector entries = random_complex_normal(d * d, rng);
            ComplexMatrix m(d, d, entries);
            double w = numerical_radius_sweep(m);
            double opnorm = operator_norm(m);
            two_sided.record_ge(w, 0.5 * opnorm);
            two_sided.record_ge(opnorm, w);
            ComplexMatrix h = random_hermitian(d, rng);
            hermitian.record(std::abs(numerical_radius_sweep(h) - operator_norm(h)));
        }
    }

    SuiteReport report;
    report.suite = "properties";
    for (const auto &c : checks) {
        report.checks.push_back(c.finish());
    }
    return report;
}

}  // namespace qunc
