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

#include <algorithm>
#include <cmath>

#include "qunc/error.h"

namespace qunc {

namespace {

// Below this Delta_1 the vector y is undefined and the chain vanishes.
constexpr double kDegenerateDeviation = 1e-12;

void require_chain_input(std::span<const Observable> observables, const QuantumState &x) {
    if (observables.size() < 2) {
        fail(ErrorKind::TooFewObservables, "a commutator chain needs at least two observables");
    }
    if (!x.is_pure_vector()) {
        fail(ErrorKind::InvalidState, "commutator chains need a pure state; lift mixed states first");
    }
    require_same_dimension(observables, x);
}

// Unit vector orthogonal to the given orthonormal vectors, or empty if none exists.
CVector orthogonal_complement_vector(std::span<const CVector> basis, std::size_t dim) {
    for (std::size_t e = 0; e < dim; e++) {
        CVector v(dim);
        v[e] = 1;
        for (const auto &b : basis) {
            cplx overlap = inner(b, v);
            for (std::size_t r = 0; r < dim; r++) {
                v[r] -= overlap * b[r];
            }
        }
        double n = norm(v);
        if (n > 0.5) {
            for (auto &c : v) {
                c /= n;
            }
            return v;
        }
    }
    return {};
}

}  // namespace

ComplexMatrix commutator_with_projector(const ComplexMatrix &a, std::span<const cplx> x) {
    CVector ax = a.apply(x);
    return outer(ax, x) - outer(x, ax);
}

ComplexMatrix chain_direct(std::span<const Observable> observables, const QuantumState &x) {
    require_chain_input(observables, x);
    const CVector &v = x.vector();
    ComplexMatrix product = commutator_with_projector(observables[0].matrix(), v);
    for (std::size_t j = 1; j < observables.size(); j++) {
        product = product * commutator_with_projector(observables[j].matrix(), v);
    }
    return product;
}

ChainCoefficients chain_coefficients(std::span<const Observable> observables, const QuantumState &x) {
    require_chain_input(observables, x);
    const std::size_t k = observables.size();
    std::vector<double> means(k);
    for (std::size_t j = 0; j < k; j++) {
        means[j] = expectation(observables[j], x);
    }
    ChainCoefficients co{2, -pair_moment(observables[0], observables[1], x), means[1], means[0], -1.0};
    for (std::size_t j = 2; j < k; j++) {
        cplx adjacent = pair_moment(observables[j - 1], observables[j], x);
        ChainCoefficients next{static_cast<int>(j + 1), 0, 0, 0, 0};
        next.a = co.a * means[j] + co.c * adjacent;
        next.b = co.b * means[j] + co.d * adjacent;
        next.c = -co.a - co.c * means[j - 1];
        next.d = -co.b - co.d * means[j - 1];
        co = next;
    }
    return co;
}

ComplexMatrix reconstruct_chain(
    const ChainCoefficients &coeffs, std::span<const Observable> observables, const QuantumState &x) {
    require_chain_input(observables, x);
    const CVector &v = x.vector();
    CVector first = observables.front().matrix().apply(v);
    CVector last = observables.back().matrix().apply(v);
    ComplexMatrix out = coeffs.a * outer(v, v);
    out += coeffs.b * outer(first, v);
    out += coeffs.c * outer(v, last);
    out += coeffs.d * outer(first, last);
    return out;
}

EffectiveMatrix effective_matrix(std::span<const Observable> observables, const QuantumState &x) {
    ChainCoefficients co = chain_coefficients(observables, x);
    const CVector &v = x.vector();
    const std::size_t dim = v.size();
    const Observable &first = observables.front();
    const Observable &last = observables.back();

    EffectiveMatrix eff;
    eff.k = co.k;
    eff.parity = co.k % 2 == 0 ? Parity::Even : Parity::Odd;
    eff.x = v;

    double mean_first = expectation(first, x);
    double mean_last = expectation(last, x);
    CVector y = first.matrix().apply(v);
    for (std::size_t r = 0; r < dim; r++) {
        y[r] -= mean_first * v[r];
    }
    eff.delta_first = norm(y);
    if (eff.delta_first < kDegenerateDeviation) {
        eff.degenerate = true;
        eff.beta_prime = 0;
        eff.gamma_prime = deviation(last, x);
        return eff;
    }
    for (auto &c : y) {
        c /= eff.delta_first;
    }

    CVector residual = last.matrix().apply(v);
    for (std::size_t r = 0; r < dim; r++) {
        residual[r] -= mean_last * v[r];
    }
    eff.beta_prime = inner(y, residual);
    for (std::size_t r = 0; r < dim; r++) {
        residual[r] -= eff.beta_prime * y[r];
    }
    eff.gamma_prime = norm(residual);
    CVector frame[2] = {v, y};
    if (eff.gamma_prime <= 1e-14 * (1 + std::abs(eff.beta_prime))) {
        eff.gamma_prime = 0;
        eff.z = orthogonal_complement_vector(frame, dim);
    } else {
        for (auto &c : residual) {
            c /= eff.gamma_prime;
        }
        eff.z = std::move(residual);
    }
    eff.y = std::move(y);

    const double d1 = eff.delta_first;
    const cplx beta_bar = std::conj(eff.beta_prime);
    const double gamma = eff.gamma_prime;
    const cplx row_x = co.c + co.d * mean_first;
    eff.f[0][0] = co.a + co.b * mean_first + co.c * mean_last + co.d * mean_first * mean_last;
    eff.f[0][1] = row_x * beta_bar;
    eff.f[0][2] = row_x * gamma;
    eff.f[1][0] = (co.b + co.d * mean_last) * d1;
    eff.f[1][1] = co.d * d1 * beta_bar;
    eff.f[1][2] = co.d * d1 * gamma;
    return eff;
}

ComplexMatrix reconstruct_effective(const EffectiveMatrix &eff) {
    const std::size_t dim = eff.x.size();
    ComplexMatrix out(dim, dim);
    if (eff.degenerate) {
        return out;
    }
    const CVector *frame[3] = {&eff.x, &eff.y, &eff.z};
    for (int r = 0; r < 2; r++) {
        for (int c = 0; c < 3; c++) {
            if (frame[c]->empty() || eff.f[r][c] == cplx{0, 0}) {
                continue;
            }
            out += eff.f[r][c] * outer(*frame[r], *frame[c]);
        }
    }
    return out;
}

double pattern_defect(const EffectiveMatrix &eff) {
    if (eff.parity == Parity::Even) {
        return std::max({std::abs(eff.at(1, 2)), std::abs(eff.at(1, 3)), std::abs(eff.at(2, 1))});
    }
    return std::max({std::abs(eff.at(1, 1)), std::abs(eff.at(2, 2)), std::abs(eff.at(2, 3))});
}

double lemma_a1_radius(cplx a, cplx b, cplx c) {
    double s = std::abs(a) + std::abs(c);
    return 0.5 * std::sqrt(std::norm(b) + s * s);
}

double lemma_a1_radius_2x2(cplx a, cplx c) {
    return 0.5 * (std::abs(a) + std::abs(c));
}

ComplexMatrix lemma_a1_matrix(cplx a, cplx b, cplx c) {
    return ComplexMatrix{{0, a, b}, {c, 0, 0}, {0, 0, 0}};
}

ComplexMatrix lemma_a1_matrix_2x2(cplx a, cplx c) {
    return ComplexMatrix{{0, a}, {c, 0}};
}

double radius_exact(const EffectiveMatrix &eff) {
    if (eff.degenerate) {
        return 0;
    }
    if (eff.parity == Parity::Even) {
        double f22 = std::abs(eff.at(2, 2));
        double f23 = std::abs(eff.at(2, 3));
        return std::max(std::abs(eff.at(1, 1)), 0.5 * (f22 + std::hypot(f22, f23)));
    }
    return lemma_a1_radius(eff.at(1, 2), eff.at(1, 3), eff.at(2, 1));
}

std::string_view norm_branch_name(NormBranch branch) {
    switch (branch) {
        case NormBranch::FirstRow:
            return "first_row";
        case NormBranch::SecondRow:
            return "second_row";
        case NormBranch::Degenerate:
            return "degenerate";
    }
    return "unknown";
}

ChainNorm norm_exact(const EffectiveMatrix &eff) {
    if (eff.degenerate) {
        return {0, NormBranch::Degenerate};
    }
    double first;
    double second;
    if (eff.parity == Parity::Even) {
        first = std::abs(eff.at(1, 1));
        second = std::hypot(std::abs(eff.at(2, 2)), std::abs(eff.at(2, 3)));
    } else {
        first = std::hypot(std::abs(eff.at(1, 2)), std::abs(eff.at(1, 3)));
        second = std::abs(eff.at(2, 1));
    }
    return first > second ? ChainNorm{first, NormBranch::FirstRow} : ChainNorm{second, NormBranch::SecondRow};
}

}  // namespace qunc
