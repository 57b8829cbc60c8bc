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

#ifndef QUNC_CHAIN_H
#define QUNC_CHAIN_H

#include <array>
#include <string_view>
#include <span>
#include <vector>

#include "qunc/linalg.h"
#include "qunc/quantum.h"

namespace qunc {

/// [A, |x><x|] for a unit vector x.
ComplexMatrix commutator_with_projector(const ComplexMatrix &a, std::span<const cplx> x);

/// D_k = prod_j [A_j, |x><x|] in the given order, multiplied out directly.
/// Needs k >= 2 and a pure state.
ComplexMatrix chain_direct(std::span<const Observable> observables, const QuantumState &x);

/// D_k = a |x><x| + b |A_1 x><x| + c |x><x| A_k + d |A_1 x><x| A_k.
struct ChainCoefficients {
    int k = 0;
    cplx a;
    cplx b;
    cplx c;
    cplx d;
};

/// Coefficients from the two-term recurrence driven by <A_j> and <A_{j-1} A_j>.
ChainCoefficients chain_coefficients(std::span<const Observable> observables, const QuantumState &x);

/// Rebuilds D_k from its coefficients.
ComplexMatrix reconstruct_chain(
    const ChainCoefficients &coeffs, std::span<const Observable> observables, const QuantumState &x);

enum class Parity { Even, Odd };

/// D_k written in the orthonormal frame {x, y, z}, where
///   A_1 x = <A_1> x + Delta_1 y,
///   A_k x = <A_k> x + beta' y + gamma' z,
/// with Delta_1 > 0 and gamma' >= 0. Only the first two rows can be nonzero.
struct EffectiveMatrix {
    int k = 0;
    Parity parity = Parity::Even;
    std::array<std::array<cplx, 3>, 2> f{};
    cplx beta_prime;
    double gamma_prime = 0;
    double delta_first = 0;
    /// Delta_1 vanished: y is undefined and D_k = 0.
    bool degenerate = false;
    CVector x;
    CVector y;
    CVector z;  // empty when no direction orthogonal to {x, y} is needed or exists

    cplx at(int row, int col) const {
        return f[row - 1][col - 1];
    }
};

EffectiveMatrix effective_matrix(std::span<const Observable> observables, const QuantumState &x);

/// sum_ij f_ij |e_i><e_j| over the stored frame.
ComplexMatrix reconstruct_effective(const EffectiveMatrix &eff);

/// Largest modulus among the entries that the parity pattern says must vanish.
double pattern_defect(const EffectiveMatrix &eff);

/// w([[0, a, b], [c, 0, 0], [0, 0, 0]]) = 1/2 sqrt(|b|^2 + (|a| + |c|)^2).
double lemma_a1_radius(cplx a, cplx b, cplx c);
/// w([[0, a], [c, 0]]) = (|a| + |c|) / 2.
double lemma_a1_radius_2x2(cplx a, cplx c);
ComplexMatrix lemma_a1_matrix(cplx a, cplx b, cplx c);
ComplexMatrix lemma_a1_matrix_2x2(cplx a, cplx c);

/// Exact w(D_k) from the pattern entries:
///   even: max{|f11|, (|f22| + sqrt(|f22|^2 + |f23|^2)) / 2}
///   odd:  sqrt((|f12| + |f21|)^2 + |f13|^2) / 2
double radius_exact(const EffectiveMatrix &eff);

/// Which row of the effective matrix carries the norm.
enum class NormBranch { FirstRow, SecondRow, Degenerate };

std::string_view norm_branch_name(NormBranch branch);

/// ||D_k|| from the pattern entries:
///   even: max{|f11|, sqrt(|f22|^2 + |f23|^2)}
///   odd:  max{sqrt(|f12|^2 + |f13|^2), |f21|}
struct ChainNorm {
    double value = 0;
    NormBranch branch = NormBranch::Degenerate;
};

ChainNorm norm_exact(const EffectiveMatrix &eff);

}  // namespace qunc

#endif
