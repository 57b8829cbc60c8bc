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

#include "qunc/linalg.h"

#include <gtest/gtest.h>

#include <cmath>

#include "qunc/error.h"
#include "qunc/quantum.h"
#include "qunc/sampling.h"
#include "test_util.h"

using namespace qunc;
using qunc::oracle::oracle_operator_norm;
using qunc::oracle::oracle_radius;
using qunc::oracle::to_eigen;

namespace {

const cplx I{0, 1};

void expect_error(ErrorKind kind, const std::function<void()> &f) {
    try {
        f();
        FAIL() << "expected " << error_kind_name(kind);
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), kind) << e.what();
    }
}

}  // namespace

TEST(complex_matrix, construction) {
    ComplexMatrix m(2, 3);
    EXPECT_EQ(m.rows(), 2u);
    EXPECT_EQ(m.cols(), 3u);
    EXPECT_FALSE(m.is_square());
    EXPECT_EQ(m.max_abs(), 0);
    expect_error(ErrorKind::InvalidArgument, [] {
        ComplexMatrix(2, 2, std::vector<cplx>(3));
    });
    expect_error(ErrorKind::InvalidArgument, [] {
        ComplexMatrix(1, 1, std::vector<cplx>{cplx{NAN, 0}});
    });
    ComplexMatrix a{{1, 2}, {3, 4}};
    EXPECT_EQ(a(1, 0), cplx(3));
    EXPECT_EQ(a.trace(), cplx(5));
    EXPECT_EQ((a * ComplexMatrix::identity(2)), a);
    EXPECT_EQ(a.adjoint()(0, 1), cplx(3));
}

TEST(complex_matrix, commutators) {
    ComplexMatrix x = pauli("X").matrix();
    ComplexMatrix y = pauli("Y").matrix();
    ComplexMatrix z = pauli("Z").matrix();
    EXPECT_LT((commutator(x, y) - 2.0 * I * z).max_abs(), 1e-15);
    EXPECT_LT(anticommutator(x, y).max_abs(), 1e-15);
}

TEST(hermitian_eigenvalues, examples) {
    std::vector<double> diag = {1, 2, 3};
    auto v = hermitian_eigenvalues(ComplexMatrix::diagonal(std::vector<double>{3, 1, 2}));
    ASSERT_EQ(v.size(), 3u);
    for (int i = 0; i < 3; i++) {
        EXPECT_NEAR(v[i], diag[i], 1e-14);
    }
    v = hermitian_eigenvalues(pauli("X").matrix());
    EXPECT_NEAR(v[0], -1, 1e-14);
    EXPECT_NEAR(v[1], 1, 1e-14);
    v = hermitian_eigenvalues(ComplexMatrix{{2, 1.0 + I}, {1.0 - I, 0}});
    EXPECT_NEAR(v[0], 1 - std::sqrt(3.0), 1e-14);
    EXPECT_NEAR(v[1], 1 + std::sqrt(3.0), 1e-14);
}

TEST(hermitian_eigenvalues, errors) {
    expect_error(ErrorKind::NonSquare, [] {
        hermitian_eigenvalues(ComplexMatrix(2, 3));
    });
    expect_error(ErrorKind::NotHermitian, [] {
        hermitian_eigenvalues(ComplexMatrix{{0, 1}, {0, 0}});
    });
    // Within 1e-10 relative: symmetrized and accepted.
    auto v = hermitian_eigenvalues(ComplexMatrix{{1, 1e-12}, {0, 1}});
    EXPECT_NEAR(v[0], 1, 1e-11);
}

TEST(hermitian_eigenvalues, matches_eigen_and_unitary_invariance) {
    Rng rng(11);
    for (int trial = 0; trial < 200; trial++) {
        std::size_t d = 1 + trial % 12;
        ComplexMatrix h = random_hermitian(d, rng);
        auto ours = hermitian_eigenvalues(h);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(h));
        for (std::size_t i = 0; i < d; i++) {
            EXPECT_NEAR(ours[i], solver.eigenvalues()(i), 1e-10);
        }
        ComplexMatrix u = random_unitary(d, rng);
        auto rotated = hermitian_eigenvalues(hermitian_part(u.adjoint() * h * u));
        for (std::size_t i = 0; i < d; i++) {
            EXPECT_NEAR(ours[i], rotated[i], 1e-10);
        }
    }
}

TEST(hermitian_eigen, vectors_diagonalize) {
    Rng rng(12);
    for (int trial = 0; trial < 50; trial++) {
        std::size_t d = 2 + trial % 7;
        ComplexMatrix h = random_hermitian(d, rng);
        HermitianEigen eig = hermitian_eigen(h);
        ComplexMatrix back = eig.vectors * ComplexMatrix::diagonal(eig.values) * eig.vectors.adjoint();
        EXPECT_LT((back - h).max_abs(), 1e-12);
        EXPECT_LT((eig.vectors.adjoint() * eig.vectors - ComplexMatrix::identity(d)).max_abs(), 1e-12);
    }
}

TEST(operator_norm, examples) {
    EXPECT_NEAR(operator_norm(ComplexMatrix{{0, 1}, {0, 0}}), 1, 1e-15);
    EXPECT_NEAR(operator_norm(ComplexMatrix{{3, 0}, {0, -5}}), 5, 1e-15);
    Rng rng(13);
    for (std::size_t d = 1; d <= 8; d++) {
        EXPECT_NEAR(operator_norm(random_unitary(d, rng)), 1, 1e-12);
    }
}

TEST(singular_values, matches_eigen) {
    Rng rng(14);
    for (int trial = 0; trial < 100; trial++) {
        std::size_t rows = 1 + trial % 6;
        std::size_t cols = 1 + (trial / 6) % 6;
        ComplexMatrix m(rows, cols, random_complex_normal(rows * cols, rng));
        auto ours = singular_values(m);
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m));
        ASSERT_EQ(ours.size(), static_cast<std::size_t>(svd.singularValues().size()));
        for (std::size_t i = 0; i < ours.size(); i++) {
            EXPECT_NEAR(ours[i], svd.singularValues()(i), 1e-12);
        }
    }
}

TEST(singular_values, resolves_small_values_of_low_rank) {
    Rng rng(15);
    for (int trial = 0; trial < 20; trial++) {
        CVector u1 = random_unit_vector(6, rng), v1 = random_unit_vector(6, rng);
        CVector u2 = random_unit_vector(6, rng), v2 = random_unit_vector(6, rng);
        ComplexMatrix m = 1e3 * outer(u1, v1) + outer(u2, v2);
        auto s = singular_values(m);
        EXPECT_LT(s[2], 1e-12 * s[0]);
    }
}

TEST(numerical_radius_sweep, examples) {
    EXPECT_NEAR(numerical_radius_sweep(ComplexMatrix{{0, 1}, {0, 0}}), 0.5, 1e-12);
    ComplexMatrix h{{1, 2.0 - I}, {2.0 + I, -3}};
    auto ev = hermitian_eigenvalues(h);
    EXPECT_NEAR(numerical_radius_sweep(h), std::max(std::abs(ev[0]), std::abs(ev[1])), 1e-12);
    // 3x3 layout [[0, a, b], [c, 0, 0], [0, 0, 0]] with a = 3, b = 0, c = 1.
    EXPECT_NEAR(numerical_radius_sweep(ComplexMatrix{{0, 3, 0}, {1, 0, 0}, {0, 0, 0}}), 2.0, 1e-12);
    EXPECT_EQ(numerical_radius_sweep(ComplexMatrix(3, 3)), 0);
}

TEST(numerical_radius_sweep, matches_independent_oracle) {
    Rng rng(16);
    for (int trial = 0; trial < 40; trial++) {
        std::size_t d = 1 + trial % 6;
        ComplexMatrix m(d, d, random_complex_normal(d * d, rng));
        EXPECT_NEAR(numerical_radius_sweep(m), oracle_radius(m), 1e-9);
    }
}

TEST(numerical_radius_sweep, two_sided_bound) {
    Rng rng(17);
    for (int trial = 0; trial < 1000; trial++) {
        std::size_t d = 1 + trial % 8;
        ComplexMatrix m(d, d, random_complex_normal(d * d, rng));
        double w = numerical_radius_sweep(m);
        double n = oracle_operator_norm(m);
        EXPECT_GE(w, n / 2 - 1e-12);
        EXPECT_LE(w, n + 1e-12);
    }
}

TEST(numerical_radius_sweep, hermitian_and_skew_equal_norm) {
    Rng rng(18);
    for (int trial = 0; trial < 100; trial++) {
        std::size_t d = 1 + trial % 8;
        ComplexMatrix h = random_hermitian(d, rng);
        EXPECT_NEAR(numerical_radius_sweep(h), operator_norm(h), 1e-9);
        ComplexMatrix skew = I * h;
        EXPECT_NEAR(numerical_radius_sweep(skew), operator_norm(skew), 1e-9);
    }
}

TEST(numerical_radius_sweep, options_validated) {
    RadiusOptions opts;
    opts.coarse_grid = 2;
    expect_error(ErrorKind::InvalidArgument, [&] {
        numerical_radius_sweep(ComplexMatrix{{1}}, opts);
    });
    opts = {};
    opts.refine_tolerance = 0;
    expect_error(ErrorKind::InvalidArgument, [&] {
        numerical_radius_sweep(ComplexMatrix{{1}}, opts);
    });
    expect_error(ErrorKind::NonSquare, [] {
        numerical_radius_sweep(ComplexMatrix(2, 1));
    });
}

TEST(numerical_range_boundary, examples) {
    auto pts = numerical_range_boundary(ComplexMatrix::diagonal(std::vector<double>{0, 1}), 4);
    ASSERT_EQ(pts.size(), 4u);
    for (cplx p : pts) {
        EXPECT_NEAR(p.imag(), 0, 1e-12);
        EXPECT_GE(p.real(), -1e-12);
        EXPECT_LE(p.real(), 1 + 1e-12);
    }

    pts = numerical_range_boundary(ComplexMatrix{{0, 1}, {0, 0}}, 64);
    double top = 0;
    for (cplx p : pts) {
        EXPECT_LE(std::abs(p), 0.5 + 1e-12);
        top = std::max(top, std::abs(p));
    }
    EXPECT_NEAR(top, 0.5, 1e-3);

    Rng rng(19);
    Observable a("A", random_hermitian(4, rng));
    CVector x = random_unit_vector(4, rng);
    ComplexMatrix c = commutator(a.matrix(), outer(x, x));
    for (cplx p : numerical_range_boundary(c, 32)) {
        EXPECT_NEAR(p.real(), 0, 1e-12);
    }
    expect_error(ErrorKind::InvalidArgument, [] {
        numerical_range_boundary(ComplexMatrix{{1}}, 2);
    });
}

TEST(numerical_range_boundary, within_radius) {
    Rng rng(20);
    for (int trial = 0; trial < 50; trial++) {
        std::size_t d = 1 + trial % 6;
        ComplexMatrix m(d, d, random_complex_normal(d * d, rng));
        double w = numerical_radius_sweep(m);
        for (cplx p : numerical_range_boundary(m, 48)) {
            EXPECT_LE(std::abs(p), w + 1e-8);
        }
    }
}

TEST(psd_sqrt, examples) {
    EXPECT_LT((psd_sqrt(ComplexMatrix::identity(3)) - ComplexMatrix::identity(3)).max_abs(), 1e-14);
    ComplexMatrix r = psd_sqrt(ComplexMatrix::diagonal(std::vector<double>{4, 9}));
    EXPECT_NEAR(r(0, 0).real(), 2, 1e-14);
    EXPECT_NEAR(r(1, 1).real(), 3, 1e-14);
    const double s = 1 / std::sqrt(2.0);
    ComplexMatrix rho = bloch_to_density({s, 0, s}).density_matrix();
    EXPECT_LT((psd_sqrt(rho) - rho).max_abs(), 1e-7);
    expect_error(ErrorKind::NotPSD, [] {
        psd_sqrt(ComplexMatrix::diagonal(std::vector<double>{1, -1}));
    });
}

TEST(psd_sqrt, squares_back) {
    Rng rng(21);
    for (int trial = 0; trial < 100; trial++) {
        std::size_t d = 1 + trial % 7;
        ComplexMatrix rho = random_density(d, rng);
        ComplexMatrix r = psd_sqrt(rho);
        EXPECT_LE((r * r - rho).max_abs(), 1e-9 * std::max(1.0, rho.max_abs()));
    }
}

TEST(kron_vec, conventions) {
    EXPECT_EQ(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)), ComplexMatrix::identity(4));
    CVector v = vec(ComplexMatrix{{1, 2}, {3, 4}});
    EXPECT_EQ(v, (CVector{1, 2, 3, 4}));
    EXPECT_EQ(unvec(v, 2, 2), (ComplexMatrix{{1, 2}, {3, 4}}));

    Rng rng(22);
    ComplexMatrix x = pauli("X").matrix();
    for (int trial = 0; trial < 100; trial++) {
        ComplexMatrix t(2, 2, random_complex_normal(4, rng));
        CVector lhs = vec(x * t);
        CVector rhs = kron(x, ComplexMatrix::identity(2)).apply(vec(t));
        for (std::size_t i = 0; i < 4; i++) {
            EXPECT_LT(std::abs(lhs[i] - rhs[i]), 1e-14);
        }
    }
}

TEST(golden_section_maximize, finds_interior_maximum) {
    double t = golden_section_maximize(
        [](double x) {
            return -(x - 0.3) * (x - 0.3);
        },
        -1, 1, 1e-12);
    EXPECT_NEAR(t, 0.3, 1e-6);
    t = golden_section_maximize(
        [](double x) {
            return std::cos(x);
        },
        -1, 2, 1e-12);
    EXPECT_NEAR(t, 0, 1e-6);
}
