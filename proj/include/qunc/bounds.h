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

#ifndef QUNC_BOUNDS_H
#define QUNC_BOUNDS_H

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qunc/chain.h"
#include "qunc/quantum.h"

namespace qunc {

/// Largest k accepted by permutation_max (k! orderings are enumerated).
inline constexpr std::size_t kMaxPermutationObservables = 8;

/// Gap tolerance for every ordering check between bounds.
inline constexpr double kOrderingTolerance = 1e-9;

/// 1/2 |<AB> - <BA>|.
double robertson(const Observable &a, const Observable &b, const QuantumState &s);

struct SchrodingerResult {
    double value = 0;      // |<AB> - <A><B>|
    double radical = 0;    // sqrt(|<[A,B]>|^2 / 4 + |<{A,B}>/2 - <A><B>|^2)
    double robertson = 0;  // |<[A,B]>| / 2
};

/// Both forms of the pairwise bound. The radical is evaluated from the
/// commutator and anticommutator matrices; a disagreement beyond 1e-10 raises
/// IdentityViolation.
SchrodingerResult schrodinger(const Observable &a, const Observable &b, const QuantumState &s);

/// Product of pairwise half-commutator bounds, on the Delta-product axis:
///   even k = 2n: 2^{-n} prod_{j<n} |<[A_2j, A_2j+1]>| |<[A_1, A_2n]>|
///   odd k = 2n+1: the square root of 2^{-k} prod_j |<[A_2j-1, A_2j]> <[A_2j, A_2j+1]>| |<[A_1, A_k]>|
double robertson_chain(std::span<const Observable> observables, const QuantumState &s);
double robertson_chain(const CorrelationData &corr);

/// The numerical-radius bound on prod Delta for k >= 2 observables, computed
/// from the moments. Even k reproduces w(D_k) up to the f11 branch; odd k
/// equals w(D_k) exactly.
double theorem22(std::span<const Observable> observables, const QuantumState &s);
double theorem22(const CorrelationData &corr);
/// Odd-k variant written with the cyclic product prod_{j=1}^{k} |alpha_{j,j+1}|
/// (indices mod k). Identical to theorem22 as a product of moduli.
double theorem22_cyclic(const CorrelationData &corr);

struct Theorem41Result {
    double general = 0;          // sqrt of the squared-product bound
    double general_squared = 0;  // bound on Delta_A^2 Delta_B^2 Delta_C^2
    std::optional<double> special;
};

/// Three-observable bound; `special` is present when Delta_A Delta_C = |alpha_AC|,
/// alpha_AB = 0 (both within 1e-9) or the dimension is 2.
Theorem41Result theorem41(
    const Observable &a, const Observable &b, const Observable &c, const QuantumState &s);

/// 1/2 |alpha_23| (|alpha_14| + Delta_1 Delta_4).
double theorem43(std::span<const Observable> observables, const QuantumState &s);

enum class PermutationEvaluator { RadiusExact, Theorem22 };

struct PermutationMax {
    double value = 0;
    std::vector<int> permutation;  // 0-based indices into the input list
};

/// Maximum of the evaluator over all k! orderings. Ties are resolved towards
/// the lexicographically first permutation (a later one must exceed the
/// running best by more than 1e-12 relative to replace it).
PermutationMax permutation_max(
    std::span<const Observable> observables, const QuantumState &s, PermutationEvaluator evaluator);

/// w(D_k) at the given order, exact closed form; mixed states are lifted.
double chain_radius_exact(std::span<const Observable> observables, const QuantumState &s);

struct NormBased {
    double norm = 0;          // ||D_k|| from the pattern entries
    NormBranch branch = NormBranch::Degenerate;
    double norm_direct = 0;   // operator_norm(chain_direct)
    /// The product formula the appendix attaches to ||D_k||:
    ///   even: |d_2n| Delta_1 Delta_2n;  odd: max{pi_1 Delta_k, pi_2 Delta_1}.
    double appendix_claim = 0;
    bool claim_holds = false;
};

NormBased norm_based(std::span<const Observable> observables, const QuantumState &s);

struct EqualityFlags {
    bool product_equals_norm = false;   // prod Delta = ||D_k||
    bool norm_equals_radius = false;    // ||D_k|| = w(D_k)
    bool equality = false;              // both of the above
    bool theorem22_tight = false;       // prod Delta = theorem22
};

struct BoundReport {
    std::size_t k = 0;
    std::size_t dim = 0;
    StateKind state_kind = StateKind::Pure;
    bool lifted = false;
    std::vector<std::string> names;
    std::vector<double> deviations;
    double deviation_product = 0;
    double radius_exact_id = 0;
    std::optional<double> radius_sweep_id;
    std::optional<PermutationMax> radius_permuted;
    double bound_theorem22 = 0;
    double bound_robertson_chain = 0;
    std::optional<SchrodingerResult> bound_schrodinger;
    std::optional<Theorem41Result> bound_theorem41;
    std::optional<double> bound_theorem43;
    NormBased norm_based;
    EqualityFlags flags;
    double ratio = 0;  // theorem22 / product, 0 when the product vanishes
    std::vector<std::string> violations;
};

struct ReportOptions {
    bool permute = false;
    /// Also run the theta-sweep oracle on D_k (skipped above this dimension).
    bool sweep_oracle = true;
    std::size_t sweep_max_dim = 32;
    RadiusOptions radius;
    /// Gap allowed by the ordering checks, relative to max(1, product).
    double ordering_tolerance = kOrderingTolerance;
};

BoundReport bound_report(
    std::span<const Observable> observables, const QuantumState &s, const ReportOptions &opts = {});

/// Ordering and consistency violations for a finished report (empty when sound).
std::vector<std::string> check_report(const BoundReport &report, double ordering_tolerance = kOrderingTolerance);

}  // namespace qunc

#endif
