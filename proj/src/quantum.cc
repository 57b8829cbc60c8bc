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

#include "qunc/quantum.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qunc/error.h"

namespace qunc {

namespace {

constexpr double kUnitNormTolerance = 1e-10;
constexpr double kTraceTolerance = 1e-9;
constexpr double kEigenClipTolerance = 1e-10;
constexpr double kBlochTolerance = 1e-12;
constexpr double kRealnessTolerance = 1e-10;
constexpr double kVarianceClip = 1e-12;

ComplexMatrix bloch_matrix(const std::array<double, 3> &r) {
    const cplx i{0, 1};
    return ComplexMatrix{
        {0.5 * (1 + r[2]), 0.5 * (r[0] - i * r[1])},
        {0.5 * (r[0] + i * r[1]), 0.5 * (1 - r[2])},
    };
}

void require_dim(const Observable &a, const QuantumState &s) {
    if (a.dim() != s.dim()) {
        std::ostringstream ss;
        ss << "observable " << a.name() << " has dimension " << a.dim() << " but the state has dimension "
           << s.dim();
        fail(ErrorKind::DimensionMismatch, ss.str());
    }
}

// Tr(M N) without forming the product.
cplx trace_of_product(const ComplexMatrix &m, const ComplexMatrix &n) {
    cplx acc = 0;
    for (std::size_t r = 0; r < m.rows(); r++) {
        for (std::size_t c = 0; c < m.cols(); c++) {
            acc += m(r, c) * n(c, r);
        }
    }
    return acc;
}

double clipped_variance(double second, double mean, const std::string &name) {
    double var = second - mean * mean;
    if (var < 0) {
        if (var < -kVarianceClip * (1 + std::abs(second))) {
            std::ostringstream ss;
            ss << "negative variance " << var << " for observable " << name;
            fail(ErrorKind::IdentityViolation, ss.str());
        }
        var = 0;
    }
    return var;
}

}  // namespace

Observable::Observable(std::string name, const ComplexMatrix &matrix) : name_(std::move(name)) {
    if (!matrix.is_square() || matrix.empty()) {
        fail(ErrorKind::NonSquare, "observable " + name_ + " is not a non-empty square matrix");
    }
    if (!is_hermitian(matrix)) {
        std::ostringstream ss;
        ss << "observable " << name_ << " is not Hermitian (defect " << hermiticity_defect(matrix) << ")";
        fail(ErrorKind::NotHermitian, ss.str());
    }
    matrix_ = hermitian_part(matrix);
}

Observable pauli(std::string_view name) {
    const cplx i{0, 1};
    if (name == "I") {
        return Observable("I", ComplexMatrix::identity(2));
    }
    if (name == "X") {
        return Observable("X", ComplexMatrix{{0, 1}, {1, 0}});
    }
    if (name == "Y") {
        return Observable("Y", ComplexMatrix{{0, -i}, {i, 0}});
    }
    if (name == "Z") {
        return Observable("Z", ComplexMatrix{{1, 0}, {0, -1}});
    }
    fail(ErrorKind::InvalidArgument, "unknown Pauli matrix '" + std::string(name) + "'");
}

std::string_view state_kind_name(StateKind kind) {
    switch (kind) {
        case StateKind::Pure:
            return "pure";
        case StateKind::Density:
            return "density";
        case StateKind::Bloch:
            return "bloch";
    }
    return "unknown";
}

QuantumState QuantumState::pure(CVector vector) {
    if (vector.empty()) {
        fail(ErrorKind::InvalidState, "pure state vector is empty");
    }
    double n = norm(vector);
    if (!std::isfinite(n) || std::abs(n - 1) > kUnitNormTolerance) {
        std::ostringstream ss;
        ss << "pure state vector has norm " << n << ", expected 1";
        fail(ErrorKind::InvalidState, ss.str());
    }
    for (auto &e : vector) {
        e /= n;
    }
    QuantumState s;
    s.kind_ = StateKind::Pure;
    s.dim_ = vector.size();
    s.vector_ = std::move(vector);
    return s;
}

QuantumState QuantumState::density(const ComplexMatrix &rho) {
    if (!rho.is_square() || rho.empty()) {
        fail(ErrorKind::InvalidState, "density matrix must be a non-empty square matrix");
    }
    if (!is_hermitian(rho)) {
        fail(ErrorKind::InvalidState, "density matrix is not Hermitian");
    }
    ComplexMatrix h = hermitian_part(rho);
    double tr = h.trace().real();
    if (std::abs(tr - 1) > kTraceTolerance) {
        std::ostringstream ss;
        ss << "density matrix has trace " << tr << ", expected 1";
        fail(ErrorKind::InvalidState, ss.str());
    }
    HermitianEigen eig = hermitian_eigen(h);
    if (eig.values.front() < -kEigenClipTolerance) {
        std::ostringstream ss;
        ss << "density matrix has eigenvalue " << eig.values.front() << " < 0";
        fail(ErrorKind::InvalidState, ss.str());
    }
    if (eig.values.front() < 0) {
        ComplexMatrix scaled = eig.vectors;
        double total = 0;
        for (std::size_t c = 0; c < h.cols(); c++) {
            double lambda = std::max(0.0, eig.values[c]);
            total += lambda;
            for (std::size_t r = 0; r < h.rows(); r++) {
                scaled(r, c) *= lambda;
            }
        }
        h = hermitian_part((1.0 / total) * (scaled * eig.vectors.adjoint()));
    }
    QuantumState s;
    s.kind_ = StateKind::Density;
    s.dim_ = h.rows();
    s.rho_ = std::move(h);
    return s;
}

QuantumState QuantumState::bloch(const std::array<double, 3> &r) {
    double n2 = r[0] * r[0] + r[1] * r[1] + r[2] * r[2];
    if (!std::isfinite(n2) || n2 > 1 + kBlochTolerance) {
        std::ostringstream ss;
        ss << "Bloch vector has squared length " << n2 << " > 1";
        fail(ErrorKind::BlochOutOfBall, ss.str());
    }
    QuantumState s;
    s.kind_ = StateKind::Bloch;
    s.dim_ = 2;
    s.bloch_ = r;
    s.rho_ = bloch_matrix(r);
    return s;
}

const CVector &QuantumState::vector() const {
    if (kind_ != StateKind::Pure) {
        fail(ErrorKind::InvalidState, "state is not a pure vector");
    }
    return vector_;
}

const std::array<double, 3> &QuantumState::bloch_vector() const {
    if (kind_ != StateKind::Bloch) {
        fail(ErrorKind::InvalidState, "state is not a Bloch state");
    }
    return bloch_;
}

ComplexMatrix QuantumState::density_matrix() const {
    if (kind_ == StateKind::Pure) {
        return outer(vector_, vector_);
    }
    return rho_;
}

QuantumState bloch_to_density(const std::array<double, 3> &r) {
    return QuantumState::density(QuantumState::bloch(r).density_matrix());
}

cplx expectation_value(const ComplexMatrix &m, const QuantumState &s) {
    if (!m.is_square() || m.rows() != s.dim()) {
        fail(ErrorKind::DimensionMismatch, "operator and state dimensions differ");
    }
    if (s.is_pure_vector()) {
        const CVector &x = s.vector();
        return inner(x, m.apply(x));
    }
    return trace_of_product(m, s.density_matrix());
}

double expectation(const Observable &a, const QuantumState &s) {
    require_dim(a, s);
    cplx v = expectation_value(a.matrix(), s);
    if (std::abs(v.imag()) > kRealnessTolerance * (1 + std::abs(v.real()))) {
        std::ostringstream ss;
        ss << "expectation of " << a.name() << " has imaginary part " << v.imag();
        fail(ErrorKind::NonRealExpectation, ss.str());
    }
    return v.real();
}

cplx pair_moment(const Observable &a, const Observable &b, const QuantumState &s) {
    require_dim(a, s);
    require_dim(b, s);
    if (s.is_pure_vector()) {
        const CVector &x = s.vector();
        return inner(a.matrix().apply(x), b.matrix().apply(x));
    }
    return trace_of_product(a.matrix(), b.matrix() * s.density_matrix());
}

double deviation(const Observable &a, const QuantumState &s) {
    double mean = expectation(a, s);
    double second = pair_moment(a, a, s).real();
    return std::sqrt(clipped_variance(second, mean, a.name()));
}

double CorrelationData::deviation_product() const {
    double p = 1;
    for (double d : deviations) {
        p *= d;
    }
    return p;
}

void require_same_dimension(std::span<const Observable> observables, const QuantumState &s) {
    for (const auto &a : observables) {
        require_dim(a, s);
    }
}

CorrelationData correlations(std::span<const Observable> observables, const QuantumState &s) {
    if (observables.empty()) {
        fail(ErrorKind::TooFewObservables, "correlations needs at least one observable");
    }
    require_same_dimension(observables, s);
    const std::size_t k = observables.size();
    CorrelationData out;
    out.dim = s.dim();
    out.k = k;
    out.means.resize(k);
    out.deviations.resize(k);
    out.pair_moments.resize(k * k);
    out.alphas.resize(k * k);

    for (std::size_t i = 0; i < k; i++) {
        out.means[i] = expectation(observables[i], s);
    }
    if (s.is_pure_vector()) {
        std::vector<CVector> images;
        images.reserve(k);
        for (const auto &a : observables) {
            images.push_back(a.matrix().apply(s.vector()));
        }
        for (std::size_t i = 0; i < k; i++) {
            for (std::size_t j = 0; j < k; j++) {
                out.pair_moments[i * k + j] = inner(images[i], images[j]);
            }
        }
    } else {
        ComplexMatrix rho = s.density_matrix();
        std::vector<ComplexMatrix> right;
        right.reserve(k);
        for (const auto &a : observables) {
            right.push_back(a.matrix() * rho);
        }
        for (std::size_t i = 0; i < k; i++) {
            for (std::size_t j = 0; j < k; j++) {
                out.pair_moments[i * k + j] = trace_of_product(observables[i].matrix(), right[j]);
            }
        }
    }
    for (std::size_t i = 0; i < k; i++) {
        double second = out.pair_moments[i * k + i].real();
        out.deviations[i] = std::sqrt(clipped_variance(second, out.means[i], observables[i].name()));
        for (std::size_t j = 0; j < k; j++) {
            out.alphas[i * k + j] = out.pair_moments[i * k + j] - out.means[i] * out.means[j];
        }
    }
    return out;
}

PureInstance lift_mixed(std::span<const Observable> observables, const QuantumState &s) {
    require_same_dimension(observables, s);
    const std::size_t d = s.dim();
    ComplexMatrix root = psd_sqrt(s.density_matrix());
    ComplexMatrix id = ComplexMatrix::identity(d);
    PureInstance out{{}, QuantumState::pure(vec(root))};
    out.observables.reserve(observables.size());
    for (const auto &a : observables) {
        out.observables.emplace_back(a.name(), kron(a.matrix(), id));
    }
    return out;
}

PureInstance as_pure_instance(std::span<const Observable> observables, const QuantumState &s) {
    if (s.is_pure_vector()) {
        require_same_dimension(observables, s);
        return {std::vector<Observable>(observables.begin(), observables.end()), s};
    }
    return lift_mixed(observables, s);
}

}  // namespace qunc
