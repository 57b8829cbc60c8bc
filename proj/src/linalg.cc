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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "qunc/error.h"

namespace qunc {

namespace {

constexpr int kMaxJacobiSweeps = 100;

void require_square(const ComplexMatrix &m, const char *what) {
    if (!m.is_square()) {
        std::ostringstream ss;
        ss << what << " needs a square matrix, got " << m.rows() << "x" << m.cols();
        fail(ErrorKind::NonSquare, ss.str());
    }
}

double off_diagonal_norm(const ComplexMatrix &a) {
    double s = 0;
    for (std::size_t r = 0; r < a.rows(); r++) {
        for (std::size_t c = 0; c < a.cols(); c++) {
            if (r != c) {
                s += std::norm(a(r, c));
            }
        }
    }
    return std::sqrt(s);
}

// Unitary acting on coordinates (p, q) that zeroes the (p, q) entry of the
// Hermitian 2x2 block [[app, apq], [conj(apq), aqq]]:
//   U = [[c, s], [-s e^{-i phi}, c e^{-i phi}]],  apq = |apq| e^{i phi}.
struct Rotation {
    double c;
    double s;
    cplx phase;  // e^{-i phi}
};

Rotation jacobi_rotation(double app, double aqq, cplx apq) {
    double mag = std::abs(apq);
    cplx phase = std::conj(apq) / mag;
    double zeta = (aqq - app) / (2 * mag);
    double t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1 + zeta * zeta));
    double c = 1 / std::sqrt(1 + t * t);
    return {c, t * c, phase};
}

// A <- A U on columns p, q.
void rotate_columns(ComplexMatrix &a, std::size_t p, std::size_t q, const Rotation &rot) {
    for (std::size_t r = 0; r < a.rows(); r++) {
        cplx ap = a(r, p);
        cplx aq = a(r, q);
        a(r, p) = rot.c * ap - rot.s * rot.phase * aq;
        a(r, q) = rot.s * ap + rot.c * rot.phase * aq;
    }
}

// A <- U^dagger A on rows p, q.
void rotate_rows(ComplexMatrix &a, std::size_t p, std::size_t q, const Rotation &rot) {
    cplx phase_conj = std::conj(rot.phase);
    for (std::size_t c = 0; c < a.cols(); c++) {
        cplx ap = a(p, c);
        cplx aq = a(q, c);
        a(p, c) = rot.c * ap - rot.s * phase_conj * aq;
        a(q, c) = rot.s * ap + rot.c * phase_conj * aq;
    }
}


}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, cplx{0, 0}) {
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        std::ostringstream ss;
        ss << "expected " << rows_ * cols_ << " entries for a " << rows_ << "x" << cols_ << " matrix, got "
           << entries_.size();
        fail(ErrorKind::InvalidArgument, ss.str());
    }
    if (!all_finite()) {
        fail(ErrorKind::InvalidArgument, "matrix entries must be finite");
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            fail(ErrorKind::InvalidArgument, "ragged matrix literal");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
    if (!all_finite()) {
        fail(ErrorKind::InvalidArgument, "matrix entries must be finite");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t k = 0; k < n; k++) {
        m(k, k) = 1;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t k = 0; k < values.size(); k++) {
        m(k, k) = values[k];
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = 0; c < cols_; c++) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

cplx ComplexMatrix::trace() const {
    cplx t = 0;
    for (std::size_t k = 0; k < std::min(rows_, cols_); k++) {
        t += (*this)(k, k);
    }
    return t;
}

double ComplexMatrix::max_abs() const {
    double m = 0;
    for (const auto &e : entries_) {
        m = std::max(m, std::abs(e));
    }
    return m;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0;
    for (const auto &e : entries_) {
        s += std::norm(e);
    }
    return std::sqrt(s);
}

bool ComplexMatrix::all_finite() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const cplx &e) {
        return std::isfinite(e.real()) && std::isfinite(e.imag());
    });
}

CVector ComplexMatrix::apply(std::span<const cplx> v) const {
    if (v.size() != cols_) {
        fail(ErrorKind::DimensionMismatch, "matrix-vector product with mismatched length");
    }
    CVector out(rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        cplx acc = 0;
        for (std::size_t c = 0; c < cols_; c++) {
            acc += (*this)(r, c) * v[c];
        }
        out[r] = acc;
    }
    return out;
}

CVector ComplexMatrix::column(std::size_t c) const {
    CVector out(rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        out[r] = (*this)(r, c);
    }
    return out;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        fail(ErrorKind::DimensionMismatch, "matrix sum with mismatched shapes");
    }
    for (std::size_t k = 0; k < entries_.size(); k++) {
        entries_[k] += other.entries_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        fail(ErrorKind::DimensionMismatch, "matrix difference with mismatched shapes");
    }
    for (std::size_t k = 0; k < entries_.size(); k++) {
        entries_[k] -= other.entries_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(cplx scale) {
    for (auto &e : entries_) {
        e *= scale;
    }
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
    a += b;
    return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
    a -= b;
    return a;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        fail(ErrorKind::DimensionMismatch, "matrix product with mismatched inner dimension");
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); r++) {
        for (std::size_t k = 0; k < a.cols(); k++) {
            cplx ark = a(r, k);
            if (ark == cplx{0, 0}) {
                continue;
            }
            for (std::size_t c = 0; c < b.cols(); c++) {
                out(r, c) += ark * b(k, c);
            }
        }
    }
    return out;
}

ComplexMatrix operator*(cplx scale, ComplexMatrix m) {
    m *= scale;
    return m;
}

cplx inner(std::span<const cplx> u, std::span<const cplx> v) {
    if (u.size() != v.size()) {
        fail(ErrorKind::DimensionMismatch, "inner product of vectors with different lengths");
    }
    cplx acc = 0;
    for (std::size_t k = 0; k < u.size(); k++) {
        acc += std::conj(u[k]) * v[k];
    }
    return acc;
}

double norm(std::span<const cplx> v) {
    double s = 0;
    for (const auto &e : v) {
        s += std::norm(e);
    }
    return std::sqrt(s);
}

ComplexMatrix outer(std::span<const cplx> u, std::span<const cplx> v) {
    ComplexMatrix out(u.size(), v.size());
    for (std::size_t r = 0; r < u.size(); r++) {
        for (std::size_t c = 0; c < v.size(); c++) {
            out(r, c) = u[r] * std::conj(v[c]);
        }
    }
    return out;
}

ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b) {
    return a * b - b * a;
}

ComplexMatrix anticommutator(const ComplexMatrix &a, const ComplexMatrix &b) {
    return a * b + b * a;
}

ComplexMatrix hermitian_part(const ComplexMatrix &m) {
    require_square(m, "hermitian_part");
    ComplexMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); r++) {
        for (std::size_t c = 0; c < m.cols(); c++) {
            out(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
        }
    }
    return out;
}

double hermiticity_defect(const ComplexMatrix &m) {
    require_square(m, "hermiticity_defect");
    double d = 0;
    for (std::size_t r = 0; r < m.rows(); r++) {
        for (std::size_t c = r; c < m.cols(); c++) {
            d = std::max(d, std::abs(m(r, c) - std::conj(m(c, r))));
        }
    }
    return d;
}

bool is_hermitian(const ComplexMatrix &m, double tol) {
    return m.is_square() && hermiticity_defect(m) <= tol * (1 + m.max_abs());
}

void RadiusOptions::validate() const {
    if (coarse_grid < 8) {
        fail(ErrorKind::InvalidArgument, "coarse_grid must be at least 8");
    }
    if (!(refine_tolerance > 0) || !(eigen_tolerance > 0)) {
        fail(ErrorKind::InvalidArgument, "radius tolerances must be positive");
    }
}

namespace {

// Diagonalizes the Hermitian matrix `a` in place; accumulates the rotations into
// `v` when it is non-null.
void jacobi_diagonalize(ComplexMatrix &a, ComplexMatrix *v, double convergence_tol) {
    const std::size_t n = a.rows();
    const double scale = a.frobenius_norm();
    for (int sweep = 0; sweep <= kMaxJacobiSweeps; sweep++) {
        if (off_diagonal_norm(a) <= convergence_tol * scale) {
            return;
        }
        if (sweep == kMaxJacobiSweeps) {
            break;
        }
        for (std::size_t p = 0; p + 1 < n; p++) {
            for (std::size_t q = p + 1; q < n; q++) {
                cplx apq = a(p, q);
                if (apq == cplx{0, 0}) {
                    continue;
                }
                Rotation rot = jacobi_rotation(a(p, p).real(), a(q, q).real(), apq);
                rotate_columns(a, p, q, rot);
                rotate_rows(a, p, q, rot);
                a(p, q) = 0;
                a(q, p) = 0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                if (v != nullptr) {
                    rotate_columns(*v, p, q, rot);
                }
            }
        }
    }
    fail(ErrorKind::NoConvergence, "Jacobi eigensolver hit the sweep cap");
}

void require_hermitian(const ComplexMatrix &m, double hermitian_tol) {
    if (!is_hermitian(m, hermitian_tol)) {
        std::ostringstream ss;
        ss << "Hermiticity defect " << hermiticity_defect(m) << " exceeds tolerance " << hermitian_tol;
        fail(ErrorKind::NotHermitian, ss.str());
    }
}

std::vector<double> sorted_diagonal(const ComplexMatrix &a) {
    std::vector<double> values(a.rows());
    for (std::size_t k = 0; k < a.rows(); k++) {
        values[k] = a(k, k).real();
    }
    std::sort(values.begin(), values.end());
    return values;
}

double top_eigenvalue_of_rotated_real_part(const ComplexMatrix &m, double theta, double tol) {
    ComplexMatrix a = hermitian_part(std::polar(1.0, -theta) * m);
    jacobi_diagonalize(a, nullptr, tol);
    return sorted_diagonal(a).back();
}

}  // namespace

HermitianEigen hermitian_eigen(const ComplexMatrix &m, double hermitian_tol, double convergence_tol) {
    require_square(m, "hermitian_eigen");
    require_hermitian(m, hermitian_tol);
    const std::size_t n = m.rows();
    ComplexMatrix a = hermitian_part(m);
    ComplexMatrix v = ComplexMatrix::identity(n);
    jacobi_diagonalize(a, &v, convergence_tol);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a(i, i).real() < a(j, j).real();
    });
    HermitianEigen out{std::vector<double>(n), ComplexMatrix(n, n)};
    for (std::size_t k = 0; k < n; k++) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; r++) {
            out.vectors(r, k) = v(r, order[k]);
        }
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix &m, double hermitian_tol, double convergence_tol) {
    require_square(m, "hermitian_eigenvalues");
    require_hermitian(m, hermitian_tol);
    ComplexMatrix a = hermitian_part(m);
    jacobi_diagonalize(a, nullptr, convergence_tol);
    return sorted_diagonal(a);
}

std::vector<double> singular_values(const ComplexMatrix &m) {
    // One-sided (Hestenes) Jacobi: rotate columns until mutually orthogonal,
    // then the column norms are the singular values. Small singular values
    // keep absolute accuracy ~ eps * ||M||, which forming M^dagger M would not.
    ComplexMatrix a = m.rows() >= m.cols() ? m : m.adjoint();
    const std::size_t n = a.cols();
    for (int sweep = 0; sweep < kMaxJacobiSweeps; sweep++) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; p++) {
            for (std::size_t q = p + 1; q < n; q++) {
                double alpha = 0;
                double beta = 0;
                cplx gamma = 0;
                for (std::size_t r = 0; r < a.rows(); r++) {
                    alpha += std::norm(a(r, p));
                    beta += std::norm(a(r, q));
                    gamma += std::conj(a(r, p)) * a(r, q);
                }
                if (gamma == cplx{0, 0} || std::abs(gamma) <= 1e-15 * std::sqrt(alpha * beta)) {
                    continue;
                }
                rotated = true;
                rotate_columns(a, p, q, jacobi_rotation(alpha, beta, gamma));
            }
        }
        if (!rotated) {
            std::vector<double> out(n);
            for (std::size_t c = 0; c < n; c++) {
                out[c] = norm(a.column(c));
            }
            std::sort(out.begin(), out.end(), std::greater<>());
            return out;
        }
    }
    fail(ErrorKind::NoConvergence, "one-sided Jacobi SVD hit the sweep cap");
}

double operator_norm(const ComplexMatrix &m) {
    if (m.empty()) {
        return 0;
    }
    return singular_values(m).front();
}

double golden_section_maximize(const std::function<double(double)> &f, double lo, double hi, double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1) / 2;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    for (int iter = 0; iter < 200 && hi - lo > tol; iter++) {
        if (f1 >= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
    }
    return f1 >= f2 ? x1 : x2;
}

double numerical_radius_sweep(const ComplexMatrix &m, const RadiusOptions &opts) {
    require_square(m, "numerical_radius_sweep");
    opts.validate();
    if (m.max_abs() == 0) {
        return 0;
    }
    const int n = opts.coarse_grid;
    const double step = 2 * std::numbers::pi / n;
    auto f = [&](double theta) {
        return top_eigenvalue_of_rotated_real_part(m, theta, opts.eigen_tolerance);
    };

    int best = 0;
    double best_value = f(0);
    for (int j = 1; j < n; j++) {
        double value = f(j * step);
        if (value > best_value) {
            best_value = value;
            best = j;
        }
    }
    double theta = golden_section_maximize(f, (best - 1) * step, (best + 1) * step, opts.refine_tolerance);
    return std::max({0.0, best_value, f(theta)});
}

std::vector<cplx> numerical_range_boundary(const ComplexMatrix &m, int n, const RadiusOptions &opts) {
    require_square(m, "numerical_range_boundary");
    if (n < 3) {
        fail(ErrorKind::InvalidArgument, "numerical_range_boundary needs at least 3 points");
    }
    std::vector<cplx> points;
    points.reserve(n);
    for (int j = 0; j < n; j++) {
        double theta = 2 * std::numbers::pi * j / n;
        HermitianEigen eig = hermitian_eigen(
            hermitian_part(std::polar(1.0, -theta) * m), kHermitianTolerance, opts.eigen_tolerance);
        CVector top = eig.vectors.column(m.rows() - 1);
        points.push_back(inner(top, m.apply(top)));
    }
    return points;
}

ComplexMatrix psd_sqrt(const ComplexMatrix &m, double tol) {
    HermitianEigen eig = hermitian_eigen(m);
    if (eig.values.front() < -tol) {
        std::ostringstream ss;
        ss << "minimum eigenvalue " << eig.values.front() << " below -" << tol;
        fail(ErrorKind::NotPSD, ss.str());
    }
    const std::size_t n = m.rows();
    ComplexMatrix scaled = eig.vectors;
    for (std::size_t c = 0; c < n; c++) {
        double root = std::sqrt(std::max(0.0, eig.values[c]));
        for (std::size_t r = 0; r < n; r++) {
            scaled(r, c) *= root;
        }
    }
    return hermitian_part(scaled * eig.vectors.adjoint());
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ar++) {
        for (std::size_t ac = 0; ac < a.cols(); ac++) {
            cplx s = a(ar, ac);
            for (std::size_t br = 0; br < b.rows(); br++) {
                for (std::size_t bc = 0; bc < b.cols(); bc++) {
                    out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
                }
            }
        }
    }
    return out;
}

CVector vec(const ComplexMatrix &m) {
    return CVector(m.entries().begin(), m.entries().end());
}

ComplexMatrix unvec(std::span<const cplx> v, std::size_t rows, std::size_t cols) {
    return ComplexMatrix(rows, cols, CVector(v.begin(), v.end()));
}

}  // namespace qunc
