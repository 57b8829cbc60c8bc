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

#include "qunc/search.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "qunc/bounds.h"
#include "qunc/error.h"
#include "qunc/sampling.h"

namespace qunc {

namespace {

constexpr double kDegenerateProduct = 1e-12;

// 8 / (3 sqrt 3) and 8 * 3^{1/4} / 3.
const double kConstant16 = 8.0 / (3.0 * std::sqrt(3.0));
const double kConstant46 = 8.0 * std::pow(3.0, 0.25) / 3.0;

const char *const kGridNames[] = {
    "product_sq",
    "product",
    "theorem22",
    "special41",
    "mean_product_abs",
    "rhs16",
    "rhs46",
    "gap_theorem22",
    "gap_special41",
    "gap16",
    "gap46",
};
constexpr std::size_t kGridCount = std::size(kGridNames);
using GridValues = std::array<double, kGridCount>;

GridValues grid_values(std::span<const Observable> triple, const QuantumState &s) {
    CorrelationData corr = correlations(triple, s);
    double product = corr.deviation_product();
    double special = 0.5 * (corr.deviations[0] * std::abs(corr.alpha(1, 2)) +
                            corr.deviations[2] * std::abs(corr.alpha(0, 1)));
    double t22 = theorem22(corr);
    double m = std::abs(corr.means[0] * corr.means[1] * corr.means[2]);
    double rhs16 = kConstant16 * m;
    double rhs46 = kConstant46 * std::pow(m, 1.5);
    double sq = product * product;
    return {sq, product, t22, special, m, rhs16, rhs46, product - t22, product - special, sq - rhs16, sq - rhs46};
}

std::array<double, 3> sphere_point(double theta, double phi) {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

QuantumState sphere_state(double theta, double phi) {
    return QuantumState::pure({std::cos(theta / 2), std::polar(std::sin(theta / 2), phi)});
}

void fold(GridQuantity &q, double value, const std::array<double, 3> &at, bool first) {
    if (first || value < q.min.value) {
        q.min = {value, at, value};
    }
    if (first || value > q.max.value) {
        q.max = {value, at, value};
    }
}

// Alternating golden-section refinement over (theta, phi) within one grid cell.
void polish(
    GridExtremum &ext, std::span<const Observable> triple, std::size_t index, bool maximize, double h_theta,
    double h_phi) {
    double z = std::clamp(ext.at[2], -1.0, 1.0);
    double theta = std::acos(z);
    double phi = std::atan2(ext.at[1], ext.at[0]);
    double sign = maximize ? 1.0 : -1.0;
    auto value_at = [&](double t, double p) {
        return grid_values(triple, sphere_state(t, p))[index];
    };
    double best = value_at(theta, phi);
    for (int round = 0; round < 4; round++) {
        double t = golden_section_maximize(
            [&](double tt) {
                return sign * value_at(tt, phi);
            },
            theta - h_theta, theta + h_theta, 1e-13);
        if (sign * value_at(t, phi) > sign * best) {
            theta = t;
            best = value_at(theta, phi);
        }
        double p = golden_section_maximize(
            [&](double pp) {
                return sign * value_at(theta, pp);
            },
            phi - h_phi, phi + h_phi, 1e-13);
        if (sign * value_at(theta, p) > sign * best) {
            phi = p;
            best = value_at(theta, phi);
        }
    }
    if (sign * best > sign * ext.value) {
        ext.value = best;
        ext.at = sphere_point(theta, phi);
    }
}

const GridQuantity &find_quantity(const std::vector<GridQuantity> &list, std::string_view name) {
    for (const auto &q : list) {
        if (q.name == name) {
            return q;
        }
    }
    fail(ErrorKind::InvalidArgument, "unknown grid quantity '" + std::string(name) + "'");
}

double state_product(std::span<const Observable> observables, const QuantumState &s) {
    return correlations(observables, s).deviation_product();
}

}  // namespace

std::string_view search_target_name(SearchTarget target) {
    switch (target) {
        case SearchTarget::Theorem22:
            return "theorem22";
        case SearchTarget::Theorem41:
            return "theorem41";
        case SearchTarget::Theorem43:
            return "theorem43";
    }
    return "unknown";
}

SearchTarget parse_search_target(std::string_view name) {
    if (name == "theorem22") {
        return SearchTarget::Theorem22;
    }
    if (name == "theorem41") {
        return SearchTarget::Theorem41;
    }
    if (name == "theorem43") {
        return SearchTarget::Theorem43;
    }
    fail(ErrorKind::InvalidArgument, "unknown search target '" + std::string(name) + "'");
}

void SearchConfig::validate() const {
    if (samples < 1) {
        fail(ErrorKind::InvalidArgument, "search needs at least one sample");
    }
    if (refine_steps < 0) {
        fail(ErrorKind::InvalidArgument, "refine_steps must be non-negative");
    }
}

double target_bound(SearchTarget target, std::span<const Observable> observables, const QuantumState &s) {
    switch (target) {
        case SearchTarget::Theorem22:
            return theorem22(observables, s);
        case SearchTarget::Theorem41: {
            if (observables.size() != 3) {
                fail(ErrorKind::InvalidArgument, "theorem41 target needs exactly three observables");
            }
            Theorem41Result r = theorem41(observables[0], observables[1], observables[2], s);
            return r.special.value_or(r.general);
        }
        case SearchTarget::Theorem43:
            return theorem43(observables, s);
    }
    fail(ErrorKind::InvalidArgument, "unknown search target");
}

TightnessResult tightness_search(std::span<const Observable> observables, const SearchConfig &cfg) {
    cfg.validate();
    if (observables.size() < 2) {
        fail(ErrorKind::TooFewObservables, "search needs at least two observables");
    }
    const std::size_t d = observables.front().dim();
    for (const auto &a : observables) {
        if (a.dim() != d) {
            fail(ErrorKind::DimensionMismatch, "observables have different dimensions");
        }
    }

    Rng rng(cfg.seed);
    CVector best_vector;
    double best_ratio = -1;
    double best_product = 0;
    double best_bound = 0;
    SearchTrace trace;
    double ratio_sum = 0;
    trace.sample_ratio_min = std::numeric_limits<double>::infinity();

    for (std::size_t i = 0; i < cfg.samples; i++) {
        CVector x = random_unit_vector(d, rng);
        QuantumState s = QuantumState::pure(x);
        if (best_vector.empty()) {
            best_vector = x;
        }
        double product = state_product(observables, s);
        if (product < kDegenerateProduct) {
            trace.skipped++;
            continue;
        }
        double bound = target_bound(cfg.target, observables, s);
        double ratio = bound / product;
        trace.evaluated++;
        ratio_sum += ratio;
        trace.sample_ratio_min = std::min(trace.sample_ratio_min, ratio);
        if (ratio > best_ratio) {
            best_ratio = ratio;
            best_product = product;
            best_bound = bound;
            best_vector = std::move(x);
            trace.best_sample = i;
        }
    }
    if (trace.evaluated == 0) {
        trace.sample_ratio_min = 0;
        best_ratio = 0;
    } else {
        trace.sample_ratio_mean = ratio_sum / static_cast<double>(trace.evaluated);
    }
    trace.sample_ratio_max = best_ratio;

    double step = 0.5;
    if (trace.evaluated > 0) {
        for (int it = 0; it < cfg.refine_steps; it++) {
            CVector g = random_complex_normal(d, rng);
            CVector candidate(d);
            for (std::size_t r = 0; r < d; r++) {
                candidate[r] = best_vector[r] * (1.0 + step * g[r]);
            }
            double n = norm(candidate);
            bool accepted = false;
            if (n > 0 && std::isfinite(n)) {
                for (auto &c : candidate) {
                    c /= n;
                }
                QuantumState s = QuantumState::pure(candidate);
                double product = state_product(observables, s);
                if (product >= kDegenerateProduct) {
                    double bound = target_bound(cfg.target, observables, s);
                    double ratio = bound / product;
                    if (ratio > best_ratio) {
                        best_ratio = ratio;
                        best_product = product;
                        best_bound = bound;
                        best_vector = std::move(candidate);
                        trace.refine_accepted++;
                        accepted = true;
                    }
                }
            }
            if (!accepted) {
                step *= 0.5;
            }
        }
    }
    trace.final_step = step;
    return {QuantumState::pure(best_vector), best_product, best_bound, best_ratio, trace};
}

const GridQuantity &BlochGridReport::sphere_quantity(std::string_view name) const {
    return find_quantity(sphere, name);
}

const GridQuantity &BlochGridReport::ball_quantity(std::string_view name) const {
    return find_quantity(ball, name);
}

BlochGridReport bloch_grid(std::span<const Observable> triple, int resolution) {
    if (triple.size() != 3) {
        fail(ErrorKind::InvalidArgument, "bloch_grid takes exactly three observables");
    }
    for (const auto &a : triple) {
        if (a.dim() != 2) {
            fail(ErrorKind::WrongDimension, "bloch_grid needs qubit observables, " + a.name() + " is not 2x2");
        }
    }
    if (resolution < 8) {
        fail(ErrorKind::InvalidArgument, "bloch_grid resolution must be at least 8");
    }

    BlochGridReport report;
    report.resolution = resolution;
    int ball_res = std::max(8, (resolution + 3) / 4);
    ball_res += ball_res % 2;
    report.ball_resolution = ball_res;
    for (const char *name : kGridNames) {
        report.sphere.push_back({name, {}, {}});
        report.ball.push_back({name, {}, {}});
    }

    const double h_theta = std::numbers::pi / resolution;
    const double h_phi = std::numbers::pi / resolution;
    for (int i = 0; i <= resolution; i++) {
        double theta = i * h_theta;
        for (int j = 0; j < 2 * resolution; j++) {
            double phi = j * h_phi;
            GridValues v = grid_values(triple, sphere_state(theta, phi));
            std::array<double, 3> at = sphere_point(theta, phi);
            for (std::size_t q = 0; q < kGridCount; q++) {
                fold(report.sphere[q], v[q], at, report.sphere_points == 0);
            }
            report.sphere_points++;
        }
    }
    for (std::size_t q = 0; q < kGridCount; q++) {
        polish(report.sphere[q].min, triple, q, false, h_theta, h_phi);
        polish(report.sphere[q].max, triple, q, true, h_theta, h_phi);
    }

    for (int a = 0; a <= ball_res; a++) {
        for (int b = 0; b <= ball_res; b++) {
            for (int c = 0; c <= ball_res; c++) {
                std::array<double, 3> r = {
                    -1.0 + 2.0 * a / ball_res, -1.0 + 2.0 * b / ball_res, -1.0 + 2.0 * c / ball_res};
                if (r[0] * r[0] + r[1] * r[1] + r[2] * r[2] > 1.0) {
                    continue;
                }
                GridValues v = grid_values(triple, QuantumState::bloch(r));
                for (std::size_t q = 0; q < kGridCount; q++) {
                    fold(report.ball[q], v[q], r, report.ball_points == 0);
                }
                report.ball_points++;
            }
        }
    }
    return report;
}

PauliClosedForms pauli_closed_forms(const std::array<double, 3> &r) {
    const double x2 = r[0] * r[0];
    const double y2 = r[1] * r[1];
    const double z2 = r[2] * r[2];
    const double p = (1 - x2) * (x2 + y2 * z2);
    const double q = (1 - z2) * (z2 + x2 * y2);
    const double s = x2 + y2 * z2;
    const double t = z2 + x2 * y2;
    const double rr = y2 + x2 * z2;
    const double m = std::abs(r[0] * r[1] * r[2]);
    PauliClosedForms out;
    out.product_sq = (1 - x2) * (1 - y2) * (1 - z2);
    out.rhs43 = 0.5 * (std::sqrt(p) + std::sqrt(q));
    out.link1 = 0.25 * (p + q) + 0.5 * std::sqrt((1 - z2) * (1 - x2) * s * t);
    out.link2 = 0.25 * (p + q) + 0.5 * std::sqrt(rr * s * t);
    out.link3 = std::sqrt(rr * s * t);
    out.link4 = 2 * std::sqrt(2.0) * std::pow(m, 1.5);
    out.rhs46 = kConstant46 * std::pow(m, 1.5);
    out.rhs16 = kConstant16 * m;
    return out;
}

SuiteReport pauli_suite(const PauliSuiteConfig &cfg) {
    const Observable xyz[3] = {pauli("X"), pauli("Y"), pauli("Z")};
    const double ineq = cfg.inequality_tolerance;
    const double eq = cfg.equality_tolerance;
    const double s2 = 1 / std::sqrt(2.0);
    const double s3 = 1 / std::sqrt(3.0);
    SuiteReport report;
    report.suite = "pauli";

    struct Moments {
        double product;
        double product_sq;
        std::array<double, 3> means;
        std::array<double, 3> deviations;
        double special;
    };
    auto moments = [&](const std::array<double, 3> &r) {
        CorrelationData corr = correlations(xyz, QuantumState::bloch(r));
        Moments m;
        m.product = corr.deviation_product();
        m.product_sq = m.product * m.product;
        m.means = {corr.means[0], corr.means[1], corr.means[2]};
        m.deviations = {corr.deviations[0], corr.deviations[1], corr.deviations[2]};
        m.special = 0.5 * (corr.deviations[0] * std::abs(corr.alpha(1, 2)) +
                           corr.deviations[2] * std::abs(corr.alpha(0, 1)));
        return m;
    };

    {
        Moments m = moments({s2, 0, s2});
        PauliClosedForms cf = pauli_closed_forms(m.means);
        CheckAccumulator acc("eq43_equality_point", eq);
        acc.record(std::abs(m.product - 0.5));
        acc.record(std::abs(cf.rhs43 - 0.5));
        acc.record(std::abs(m.special - 0.5));
        report.checks.push_back(acc.finish());
    }
    {
        Moments m = moments({s3, s3, s3});
        PauliClosedForms cf = pauli_closed_forms(m.means);
        CheckAccumulator a46("eq46_equality_point", eq);
        a46.record(std::abs(m.product_sq - 8.0 / 27));
        a46.record(std::abs(cf.rhs46 - 8.0 / 27));
        report.checks.push_back(a46.finish());
        CheckAccumulator a16("eq16_equality_point", eq);
        a16.record(std::abs(m.product_sq - 8.0 / 27));
        a16.record(std::abs(cf.rhs16 - 8.0 / 27));
        report.checks.push_back(a16.finish());
        CheckAccumulator dev("symmetric_point_deviations", eq);
        for (double d : m.deviations) {
            dev.record(std::abs(d - std::sqrt(2.0 / 3)));
        }
        report.checks.push_back(dev.finish());
    }

    std::vector<std::array<double, 3>> points = {
        {s2, 0, s2}, {-s2, 0, s2}, {s3, s3, s3}, {-s3, s3, -s3}, {0, 0, 0}, {0, 0, 1}, {1, 0, 0}};
    Rng rng(cfg.seed);
    for (std::size_t i = 0; i < cfg.ball_samples; i++) {
        points.push_back(random_bloch_ball(rng));
    }

    CheckAccumulator formula43("eq43_closed_form_matches_moments", eq);
    CheckAccumulator holds43("eq43_holds", ineq);
    CheckAccumulator link0("eq44_product_ge_link1", ineq);
    CheckAccumulator link1("eq44_link1_ge_link2", ineq);
    CheckAccumulator link2("eq44_link2_ge_link3", ineq);
    CheckAccumulator link3("eq44_link3_ge_link4", ineq);
    CheckAccumulator holds45("eq45_holds", ineq);
    CheckAccumulator holds46("eq46_holds", ineq);
    CheckAccumulator holds16("eq16_holds", ineq);
    for (const auto &r : points) {
        Moments m = moments(r);
        PauliClosedForms cf = pauli_closed_forms(m.means);
        formula43.record(std::abs(cf.rhs43 - m.special));
        holds43.record_ge(m.product, cf.rhs43);
        link0.record_ge(m.product_sq, cf.link1);
        link1.record_ge(cf.link1, cf.link2);
        link2.record_ge(cf.link2, cf.link3);
        link3.record_ge(cf.link3, cf.link4);
        holds45.record_ge(m.product_sq, cf.link4);
        holds46.record_ge(m.product_sq, cf.rhs46);
        holds16.record_ge(m.product_sq, cf.rhs16);
    }
    for (auto *acc : {&formula43, &holds43, &link0, &link1, &link2, &link3, &holds45, &holds46, &holds16}) {
        report.checks.push_back(acc->finish());
    }

    // Zero-mean fallbacks: r2 = 0 on the great circle and across the disc, then r2 = r3 = 0.
    CheckAccumulator fallback_y("fallback_y_zero", ineq);
    CheckAccumulator fallback_yz("fallback_yz_zero", ineq);
    auto fallback_one = [](double mean) {
        return std::sqrt(std::max(0.0, (1 - mean * mean) * mean * mean));
    };
    for (std::size_t i = 0; i < cfg.circle_samples; i++) {
        double angle = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(cfg.circle_samples);
        for (double radius : {1.0, 0.75, 0.5, 0.25}) {
            Moments m = moments({radius * std::cos(angle), 0, radius * std::sin(angle)});
            fallback_y.record_ge(m.product, 0.5 * (fallback_one(m.means[0]) + fallback_one(m.means[2])));
        }
        double r1 = std::cos(angle);
        Moments m = moments({r1, 0, 0});
        fallback_yz.record_ge(m.product, 0.5 * fallback_one(m.means[0]));
    }
    report.checks.push_back(fallback_y.finish());
    report.checks.push_back(fallback_yz.finish());

    BlochGridReport grid = bloch_grid(xyz, cfg.grid_resolution);
    {
        // On pure states the product of squared deviations peaks at 8/27 on the
        // diagonal |r_i| = 1/sqrt 3 and vanishes at the poles.
        const GridQuantity &sq = grid.sphere_quantity("product_sq");
        CheckAccumulator gext("grid_sphere_extremum_product_sq", cfg.grid_tolerance);
        gext.record(std::abs(sq.max.value - 8.0 / 27));
        report.checks.push_back(gext.finish());
        CheckAccumulator gloc("grid_sphere_extremum_location", 1e-3);
        for (double c : sq.max.at) {
            gloc.record(std::abs(std::abs(c) - s3));
        }
        report.checks.push_back(gloc.finish());
        CheckAccumulator gmin("grid_sphere_min_product_sq", cfg.grid_tolerance);
        gmin.record(std::abs(sq.min.value));
        report.checks.push_back(gmin.finish());

        const GridQuantity &ball_sq = grid.ball_quantity("product_sq");
        CheckAccumulator gmax("grid_ball_max_product_sq", cfg.grid_tolerance);
        gmax.record(std::abs(ball_sq.max.value - 1.0));
        for (double c : ball_sq.max.at) {
            gmax.record(std::abs(c));
        }
        report.checks.push_back(gmax.finish());

        const GridQuantity &mp = grid.sphere_quantity("mean_product_abs");
        CheckAccumulator gmean("grid_sphere_max_mean_product", cfg.grid_tolerance);
        gmean.record(std::abs(mp.max.value - 1 / (3 * std::sqrt(3.0))));
        report.checks.push_back(gmean.finish());

        CheckAccumulator ggaps("grid_gaps_nonnegative", ineq);
        for (const char *name : {"gap_theorem22", "gap_special41", "gap16", "gap46"}) {
            ggaps.record(-grid.sphere_quantity(name).min.value);
            ggaps.record(-grid.ball_quantity(name).min.value);
        }
        report.checks.push_back(ggaps.finish());
    }
    return report;
}

}  // namespace qunc
