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

#ifndef QUNC_LINALG_H
#define QUNC_LINALG_H

#include <complex>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace qunc {

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;

/// Relative Hermiticity tolerance used to accept (and symmetrize) inputs that
/// picked up round-off from upstream products.
inline constexpr double kHermitianTolerance = 1e-10;

/// Dense row-major complex matrix sized for the small operators this library
/// works with (d <= 64).
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    /// Throws InvalidArgument when the entry count is wrong or an entry is not finite.
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const double> values);

    std::size_t rows() const noexcept {
        return rows_;
    }
    std::size_t cols() const noexcept {
        return cols_;
    }
    bool is_square() const noexcept {
        return rows_ == cols_;
    }
    bool empty() const noexcept {
        return entries_.empty();
    }

    cplx &operator()(std::size_t r, std::size_t c) {
        return entries_[r * cols_ + c];
    }
    const cplx &operator()(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }
    std::span<const cplx> entries() const noexcept {
        return entries_;
    }

    ComplexMatrix adjoint() const;
    cplx trace() const;
    double max_abs() const;
    double frobenius_norm() const;
    bool all_finite() const;

    CVector apply(std::span<const cplx> v) const;
    CVector column(std::size_t c) const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(cplx scale);

    friend bool operator==(const ComplexMatrix &, const ComplexMatrix &) = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator*(cplx scale, ComplexMatrix m);

/// <u|v>, conjugate-linear in u.
cplx inner(std::span<const cplx> u, std::span<const cplx> v);
double norm(std::span<const cplx> v);
/// |u><v|
ComplexMatrix outer(std::span<const cplx> u, std::span<const cplx> v);

ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix anticommutator(const ComplexMatrix &a, const ComplexMatrix &b);
/// (M + M^dagger) / 2
ComplexMatrix hermitian_part(const ComplexMatrix &m);
/// max |M - M^dagger| entrywise.
double hermiticity_defect(const ComplexMatrix &m);
/// True when ||M - M^dagger||_max <= tol * (1 + ||M||_max).
bool is_hermitian(const ComplexMatrix &m, double tol = kHermitianTolerance);

struct RadiusOptions {
    int coarse_grid = 1024;
    double refine_tolerance = 1e-12;
    double eigen_tolerance = 1e-13;

    /// Throws InvalidArgument unless coarse_grid >= 8 and both tolerances are positive.
    void validate() const;
};

struct HermitianEigen {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // column j belongs to values[j]
};

/// Cyclic complex Jacobi. The input must be Hermitian within `hermitian_tol`
/// (relative); it is symmetrized before rotating. Converges when the
/// off-diagonal Frobenius mass drops below `convergence_tol` times the
/// Frobenius norm; gives up with NoConvergence after 100 sweeps.
HermitianEigen hermitian_eigen(
    const ComplexMatrix &m, double hermitian_tol = kHermitianTolerance, double convergence_tol = 1e-13);
std::vector<double> hermitian_eigenvalues(
    const ComplexMatrix &m, double hermitian_tol = kHermitianTolerance, double convergence_tol = 1e-13);

/// Singular values in descending order.
std::vector<double> singular_values(const ComplexMatrix &m);
/// Largest singular value.
double operator_norm(const ComplexMatrix &m);

/// w(M) = max over theta of lambda_max(Re(e^{-i theta} M)): coarse uniform
/// grid on [0, 2 pi), then golden-section refinement over the best cell and
/// its two neighbours.
double numerical_radius_sweep(const ComplexMatrix &m, const RadiusOptions &opts = {});

/// Boundary points <v|M|v> with v the top eigenvector of Re(e^{-i theta} M),
/// theta on a uniform n-point grid.
std::vector<cplx> numerical_range_boundary(const ComplexMatrix &m, int n, const RadiusOptions &opts = {});

/// Hermitian PSD square root. Eigenvalues in [-tol, 0) are clipped to zero;
/// anything below -tol raises NotPSD.
ComplexMatrix psd_sqrt(const ComplexMatrix &m, double tol = 1e-10);

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// Row-major vectorization: vec(M)[r * cols + c] = M(r, c). Under this
/// convention vec(A T) = kron(A, I) vec(T).
CVector vec(const ComplexMatrix &m);
ComplexMatrix unvec(std::span<const cplx> v, std::size_t rows, std::size_t cols);

/// Golden-section search for the maximizer of a unimodal f on [lo, hi];
/// stops once the bracket is narrower than `tol`. Returns the abscissa.
double golden_section_maximize(const std::function<double(double)> &f, double lo, double hi, double tol);

}  // namespace qunc

#endif
