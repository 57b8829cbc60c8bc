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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "qunc/error.h"

namespace qunc {

namespace {

constexpr double kSchrodingerTolerance = 1e-10;
constexpr double kSpecialCaseTolerance = 1e-9;
constexpr double kSweepAgreement = 1e-8;

void require_at_least_two(std::size_t k) {
    if (k < 2) {
        fail(ErrorKind::TooFewObservables, "bounds need at least two observables");
    }
}

double half_commutator(const CorrelationData &corr, std::size_t i, std::size_t j) {
    return 0.5 * std::abs(corr.pair(i, j) - corr.pair(j, i));
}

// theorem22 evaluated on the ordering perm (0-based indices into corr).
double theorem22_indexed(const CorrelationData &corr, std::span<const int> perm) {
    const std::size_t k = perm.size();
    require_at_least_two(k);
    auto alpha = [&](std::size_t i, std::size_t j) {
        return std::abs(corr.alpha(perm[i], perm[j]));
    };
    auto dev = [&](std::size_t i) {
        return corr.deviations[perm[i]];
    };
    if (k % 2 == 0) {
        double middle = 1;
        for (std::size_t i = 1; i + 2 < k; i += 2) {
            middle *= alpha(i, i + 1);
        }
        return 0.5 * middle * (alpha(0, k - 1) + dev(0) * dev(k - 1));
    }
    double pi1 = 1;
    double pi2 = 1;
    for (std::size_t i = 0; i + 1 < k; i += 2) {
        pi1 *= alpha(i, i + 1);
        pi2 *= alpha(i + 1, i + 2);
    }
    double radicand = 2 * pi1 * pi2 * alpha(0, k - 1) + pi2 * pi2 * dev(0) * dev(0) +
                      pi1 * pi1 * dev(k - 1) * dev(k - 1);
    return 0.5 * std::sqrt(radicand);
}

std::vector<int> identity_permutation(std::size_t k) {
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    return perm;
}

std::vector<Observable> reorder(std::span<const Observable> observables, std::span<const int> perm) {
    std::vector<Observable> out;
    out.reserve(perm.size());
    for (int p : perm) {
        out.push_back(observables[p]);
    }
    return out;
}

double scaled_tolerance(double base, double magnitude) {
    return base * std::max(1.0, magnitude);
}

}  // namespace

double robertson(const Observable &a, const Observable &b, const QuantumState &s) {
    return 0.5 * std::abs(pair_moment(a, b, s) - pair_moment(b, a, s));
}

SchrodingerResult schrodinger(const Observable &a, const Observable &b, const QuantumState &s) {
    double mean_a = expectation(a, s);
    double mean_b = expectation(b, s);
    cplx ab = pair_moment(a, b, s);
    SchrodingerResult out;
    out.value = std::abs(ab - mean_a * mean_b);

    cplx comm = expectation_value(commutator(a.matrix(), b.matrix()), s);
    double anti = expectation_value(anticommutator(a.matrix(), b.matrix()), s).real();
    double shifted = 0.5 * anti - mean_a * mean_b;
    out.radical = std::sqrt(0.25 * std::norm(comm) + shifted * shifted);
    out.robertson = 0.5 * std::abs(comm);

    double tol = kSchrodingerTolerance * (1 + std::abs(ab) + std::abs(mean_a * mean_b));
    if (std::abs(out.value - out.radical) > tol) {
        std::ostringstream ss;
        ss << "|<AB> - <A><B>| = " << out.value << " but the commutator/anticommutator radical is "
           << out.radical << " for " << a.name() << ", " << b.name();
        fail(ErrorKind::IdentityViolation, ss.str());
    }
    if (out.value < out.robertson - tol) {
        fail(ErrorKind::IdentityViolation, "pairwise correlation below the half-commutator bound");
    }
    return out;
}

double robertson_chain(const CorrelationData &corr) {
    const std::size_t k = corr.k;
    require_at_least_two(k);
    if (k % 2 == 0) {
        double value = half_commutator(corr, 0, k - 1);
        for (std::size_t i = 1; i + 2 < k; i += 2) {
            value *= half_commutator(corr, i, i + 1);
        }
        return value;
    }
    double squared = half_commutator(corr, 0, k - 1);
    for (std::size_t i = 0; i + 1 < k; i++) {
        squared *= half_commutator(corr, i, i + 1);
    }
    return std::sqrt(squared);
}

double robertson_chain(std::span<const Observable> observables, const QuantumState &s) {
    require_at_least_two(observables.size());
    return robertson_chain(correlations(observables, s));
}

double theorem22(const CorrelationData &corr) {
    return theorem22_indexed(corr, identity_permutation(corr.k));
}

double theorem22(std::span<const Observable> observables, const QuantumState &s) {
    require_at_least_two(observables.size());
    return theorem22(correlations(observables, s));
}

double theorem22_cyclic(const CorrelationData &corr) {
    const std::size_t k = corr.k;
    require_at_least_two(k);
    if (k % 2 == 0) {
        return theorem22(corr);
    }
    double cyclic = 1;
    for (std::size_t i = 0; i < k; i++) {
        cyclic *= std::abs(corr.alpha(i, (i + 1) % k));
    }
    double pi1 = 1;
    double pi2 = 1;
    for (std::size_t i = 0; i + 1 < k; i += 2) {
        pi1 *= std::abs(corr.alpha(i, i + 1));
        pi2 *= std::abs(corr.alpha(i + 1, i + 2));
    }
    double d1 = corr.deviations.front();
    double dk = corr.deviations.back();
    return 0.5 * std::sqrt(2 * cyclic + d1 * d1 * pi2 * pi2 + dk * dk * pi1 * pi1);
}

Theorem41Result theorem41(const Observable &a, const Observable &b, const Observable &c, const QuantumState &s) {
    const Observable triple[3] = {a, b, c};
    CorrelationData corr = correlations(triple, s);
    double ab = std::abs(corr.alpha(0, 1));
    double bc = std::abs(corr.alpha(1, 2));
    double ac = std::abs(corr.alpha(0, 2));
    double da = corr.deviations[0];
    double dc = corr.deviations[2];

    Theorem41Result out;
    out.general_squared = 0.25 * (dc * dc * ab * ab + da * da * bc * bc) + 0.5 * ab * bc * ac;
    out.general = std::sqrt(out.general_squared);
    bool aligned = std::abs(da * dc - ac) <= kSpecialCaseTolerance;
    bool uncorrelated = ab <= kSpecialCaseTolerance;
    if (aligned || uncorrelated || s.dim() == 2) {
        out.special = 0.5 * (da * bc + dc * ab);
    }
    return out;
}

double theorem43(std::span<const Observable> observables, const QuantumState &s) {
    if (observables.size() != 4) {
        fail(ErrorKind::InvalidArgument, "theorem43 takes exactly four observables");
    }
    CorrelationData corr = correlations(observables, s);
    return 0.5 * std::abs(corr.alpha(1, 2)) *
           (std::abs(corr.alpha(0, 3)) + corr.deviations[0] * corr.deviations[3]);
}

double chain_radius_exact(std::span<const Observable> observables, const QuantumState &s) {
    PureInstance inst = as_pure_instance(observables, s);
    return radius_exact(effective_matrix(inst.observables, inst.state));
}

PermutationMax permutation_max(
    std::span<const Observable> observables, const QuantumState &s, PermutationEvaluator evaluator) {
    const std::size_t k = observables.size();
    require_at_least_two(k);
    if (k > kMaxPermutationObservables) {
        std::ostringstream ss;
        ss << "permutation_max enumerates k! orderings and is capped at k = " << kMaxPermutationObservables
           << ", got " << k;
        fail(ErrorKind::TooManyObservables, ss.str());
    }
    require_same_dimension(observables, s);

    std::optional<PureInstance> inst;
    std::optional<CorrelationData> corr;
    if (evaluator == PermutationEvaluator::RadiusExact) {
        inst = as_pure_instance(observables, s);
    } else {
        corr = correlations(observables, s);
    }
    auto evaluate = [&](std::span<const int> perm) {
        if (corr) {
            return theorem22_indexed(*corr, perm);
        }
        std::vector<Observable> ordered = reorder(inst->observables, perm);
        return radius_exact(effective_matrix(ordered, inst->state));
    };

    std::vector<int> perm = identity_permutation(k);
    PermutationMax best{evaluate(perm), perm};
    while (std::next_permutation(perm.begin(), perm.end())) {
        double value = evaluate(perm);
        if (value > best.value + 1e-12 * std::max(1.0, best.value)) {
            best = {value, perm};
        }
    }
    return best;
}

NormBased norm_based(std::span<const Observable> observables, const QuantumState &s) {
    require_at_least_two(observables.size());
    PureInstance inst = as_pure_instance(observables, s);
    EffectiveMatrix eff = effective_matrix(inst.observables, inst.state);
    CorrelationData corr = correlations(inst.observables, inst.state);
    ChainCoefficients co = chain_coefficients(inst.observables, inst.state);
    ChainNorm cn = norm_exact(eff);

    NormBased out;
    out.norm = cn.value;
    out.branch = cn.branch;
    out.norm_direct = operator_norm(chain_direct(inst.observables, inst.state));
    const std::size_t k = corr.k;
    double d1 = corr.deviations.front();
    double dk = corr.deviations.back();
    if (k % 2 == 0) {
        out.appendix_claim = std::abs(co.d) * d1 * dk;
    } else {
        double pi1 = 1;
        double pi2 = 1;
        for (std::size_t i = 0; i + 1 < k; i += 2) {
            pi1 *= std::abs(corr.alpha(i, i + 1));
            pi2 *= std::abs(corr.alpha(i + 1, i + 2));
        }
        out.appendix_claim = std::max(pi1 * dk, pi2 * d1);
    }
    out.claim_holds = std::abs(out.norm - out.appendix_claim) <= scaled_tolerance(kOrderingTolerance, out.norm);
    return out;
}

BoundReport bound_report(std::span<const Observable> observables, const QuantumState &s, const ReportOptions &opts) {
    const std::size_t k = observables.size();
    require_at_least_two(k);
    require_same_dimension(observables, s);

    BoundReport r;
    r.k = k;
    r.dim = s.dim();
    r.state_kind = s.kind();
    for (const auto &a : observables) {
        r.names.push_back(a.name());
    }
    CorrelationData corr = correlations(observables, s);
    r.deviations = corr.deviations;
    r.deviation_product = corr.deviation_product();

    PureInstance inst = as_pure_instance(observables, s);
    r.lifted = !s.is_pure_vector();
    EffectiveMatrix eff = effective_matrix(inst.observables, inst.state);
    r.radius_exact_id = radius_exact(eff);
    if (opts.sweep_oracle && inst.state.dim() <= opts.sweep_max_dim) {
        r.radius_sweep_id = numerical_radius_sweep(chain_direct(inst.observables, inst.state), opts.radius);
    }
    if (opts.permute) {
        r.radius_permuted = permutation_max(inst.observables, inst.state, PermutationEvaluator::RadiusExact);
    }

    r.bound_theorem22 = theorem22(corr);
    r.bound_robertson_chain = robertson_chain(corr);
    if (k == 2) {
        r.bound_schrodinger = schrodinger(observables[0], observables[1], s);
    } else if (k == 3) {
        r.bound_theorem41 = theorem41(observables[0], observables[1], observables[2], s);
    } else if (k == 4) {
        r.bound_theorem43 = theorem43(observables, s);
    }
    r.norm_based = norm_based(inst.observables, inst.state);

    const double tol = scaled_tolerance(kOrderingTolerance, r.deviation_product);
    r.flags.product_equals_norm = std::abs(r.deviation_product - r.norm_based.norm) <= tol;
    r.flags.norm_equals_radius = std::abs(r.norm_based.norm - r.radius_exact_id) <= tol;
    r.flags.equality = r.flags.product_equals_norm && r.flags.norm_equals_radius;
    r.flags.theorem22_tight = std::abs(r.deviation_product - r.bound_theorem22) <= tol;
    r.ratio = r.deviation_product > 0 ? r.bound_theorem22 / r.deviation_product : 0;
    r.violations = check_report(r, opts.ordering_tolerance);
    return r;
}

std::vector<std::string> check_report(const BoundReport &r, double ordering_tolerance) {
    std::vector<std::string> out;
    const double tol = scaled_tolerance(ordering_tolerance, r.deviation_product);
    auto expect_ge = [&](double hi, double lo, const char *what) {
        if (hi - lo < -tol) {
            std::ostringstream ss;
            ss.precision(17);
            ss << what << ": " << hi << " < " << lo;
            out.push_back(ss.str());
        }
    };
    double permuted = r.radius_permuted ? r.radius_permuted->value : r.radius_exact_id;
    expect_ge(r.deviation_product, permuted, "product >= permuted radius");
    expect_ge(permuted, r.radius_exact_id, "permuted radius >= identity radius");
    expect_ge(r.radius_exact_id, r.bound_theorem22, "identity radius >= theorem22");
    expect_ge(r.bound_theorem22, r.bound_robertson_chain, "theorem22 >= chained Robertson");
    expect_ge(r.norm_based.norm, r.radius_exact_id, "norm >= radius");
    expect_ge(r.deviation_product, r.norm_based.norm, "product >= norm");
    if (std::abs(r.norm_based.norm - r.norm_based.norm_direct) > scaled_tolerance(kOrderingTolerance, r.norm_based.norm)) {
        std::ostringstream ss;
        ss.precision(17);
        ss << "pattern norm " << r.norm_based.norm << " differs from direct norm " << r.norm_based.norm_direct;
        out.push_back(ss.str());
    }
    if (r.radius_sweep_id &&
        std::abs(*r.radius_sweep_id - r.radius_exact_id) > scaled_tolerance(kSweepAgreement, r.deviation_product)) {
        std::ostringstream ss;
        ss.precision(17);
        ss << "closed-form radius " << r.radius_exact_id << " differs from sweep " << *r.radius_sweep_id;
        out.push_back(ss.str());
    }
    return out;
}

}  // namespace qunc
