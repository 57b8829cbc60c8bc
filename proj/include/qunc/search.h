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

#ifndef QUNC_SEARCH_H
#define QUNC_SEARCH_H

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qunc/quantum.h"
#include "qunc/suite.h"

namespace qunc {

enum class SearchTarget { Theorem22, Theorem41, Theorem43 };

std::string_view search_target_name(SearchTarget target);
/// Accepts "theorem22", "theorem41" and "theorem43"; anything else raises InvalidArgument.
SearchTarget parse_search_target(std::string_view name);

struct SearchConfig {
    std::size_t samples = 1000;
    std::uint64_t seed = 0;
    int refine_steps = 0;
    SearchTarget target = SearchTarget::Theorem22;

    void validate() const;
};

struct SearchTrace {
    std::size_t evaluated = 0;
    std::size_t skipped = 0;  // samples with prod Delta < 1e-12
    std::size_t best_sample = 0;
    double sample_ratio_min = 0;
    double sample_ratio_mean = 0;
    double sample_ratio_max = 0;  // before refinement
    int refine_accepted = 0;
    double final_step = 0;
};

struct TightnessResult {
    QuantumState best_state;
    double product = 0;
    double bound = 0;
    double ratio = 0;
    SearchTrace trace;
};

/// The bound selected by `target` for a pure state. theorem41 uses the
/// special form when its predicate holds, otherwise the general one.
double target_bound(SearchTarget target, std::span<const Observable> observables, const QuantumState &s);

/// Samples pure states (normalized complex-normal vectors) and keeps the
/// largest bound/product ratio, ties going to the lowest sample index, then
/// hill-climbs with multiplicative perturbations whose step halves on every
/// rejected proposal. Identical inputs give bit-identical results.
TightnessResult tightness_search(std::span<const Observable> observables, const SearchConfig &cfg);

struct GridExtremum {
    double value = 0;
    std::array<double, 3> at{};
    double grid_value = 0;  // before local refinement
};

struct GridQuantity {
    std::string name;
    GridExtremum min;
    GridExtremum max;
};

struct BlochGridReport {
    int resolution = 0;
    int ball_resolution = 0;
    std::size_t sphere_points = 0;
    std::size_t ball_points = 0;
    std::vector<GridQuantity> sphere;
    std::vector<GridQuantity> ball;

    const GridQuantity &sphere_quantity(std::string_view name) const;
    const GridQuantity &ball_quantity(std::string_view name) const;
};

/// Evaluates a qubit triple (A, B, C) over a latitude/longitude grid on the
/// Bloch sphere ((resolution + 1) x 2 resolution pure states) and a cubic grid
/// of the ball (mixed states, ball_resolution = max(8, resolution / 4) rounded
/// up to even, so the centre is a grid point). Sphere extrema are polished by
/// alternating golden-section searches over one grid cell. Quantities:
///   product_sq, product, theorem22, special41, mean_product_abs, rhs16, rhs46,
///   gap_theorem22, gap_special41, gap16, gap46.
BlochGridReport bloch_grid(std::span<const Observable> triple, int resolution);

struct PauliSuiteConfig {
    std::uint64_t seed = 0;
    std::size_t ball_samples = 1000;
    std::size_t circle_samples = 360;
    int grid_resolution = 200;
    double inequality_tolerance = 1e-9;
    double equality_tolerance = 1e-10;
    double grid_tolerance = 1e-6;
};

/// Pauli-matrix verification table: the three-observable bound and its
/// equality point, the chain of weaker Pauli inequalities, the two constant
/// bounds with their equality state, the zero-mean fallbacks and the grid
/// extrema.
SuiteReport pauli_suite(const PauliSuiteConfig &cfg = {});

/// Closed forms for X, Y, Z at Bloch vector r (means r1, r2, r3).
struct PauliClosedForms {
    double product_sq;
    double rhs43;    // bound on the Delta product
    double link1;    // successive lower bounds on product_sq
    double link2;
    double link3;
    double link4;    // 2 sqrt 2 |r1 r2 r3|^{3/2}
    double rhs46;
    double rhs16;
};

PauliClosedForms pauli_closed_forms(const std::array<double, 3> &r);

}  // namespace qunc

#endif
