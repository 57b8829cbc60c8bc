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

#ifndef QUNC_QUANTUM_H
#define QUNC_QUANTUM_H

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qunc/linalg.h"

namespace qunc {

/// Named Hermitian matrix. Construction validates Hermiticity (relative
/// tolerance 1e-10) and stores the symmetrized matrix.
class Observable {
   public:
    Observable(std::string name, const ComplexMatrix &matrix);

    const std::string &name() const noexcept {
        return name_;
    }
    const ComplexMatrix &matrix() const noexcept {
        return matrix_;
    }
    std::size_t dim() const noexcept {
        return matrix_.rows();
    }

   private:
    std::string name_;
    ComplexMatrix matrix_;
};

/// "I", "X", "Y" or "Z".
Observable pauli(std::string_view name);

enum class StateKind { Pure, Density, Bloch };

std::string_view state_kind_name(StateKind kind);

class QuantumState {
   public:
    /// Unit vector; norm must be 1 within 1e-10.
    static QuantumState pure(CVector vector);
    /// Hermitian, unit trace within 1e-9, eigenvalues >= -1e-10. Slightly
    /// negative eigenvalues are clipped and the matrix renormalized.
    static QuantumState density(const ComplexMatrix &rho);
    /// Qubit state 1/2 (I + r1 X + r2 Y + r3 Z); |r| <= 1 + 1e-12.
    static QuantumState bloch(const std::array<double, 3> &r);

    StateKind kind() const noexcept {
        return kind_;
    }
    std::size_t dim() const noexcept {
        return dim_;
    }
    bool is_pure_vector() const noexcept {
        return kind_ == StateKind::Pure;
    }

    /// Pure kind only.
    const CVector &vector() const;
    /// Bloch kind only.
    const std::array<double, 3> &bloch_vector() const;
    /// Density matrix for every kind (|x><x| for pure states).
    ComplexMatrix density_matrix() const;

   private:
    QuantumState() = default;

    StateKind kind_ = StateKind::Pure;
    std::size_t dim_ = 0;
    CVector vector_;
    ComplexMatrix rho_;
    std::array<double, 3> bloch_{};
};

/// Density-kind state for a Bloch vector; raises BlochOutOfBall outside the unit ball.
QuantumState bloch_to_density(const std::array<double, 3> &r);

/// Tr(M rho) or <x|M|x> for an arbitrary square matrix.
cplx expectation_value(const ComplexMatrix &m, const QuantumState &s);

/// <A>. Raises NonRealExpectation when the imaginary part exceeds 1e-10.
double expectation(const Observable &a, const QuantumState &s);
/// <AB> = Tr(AB rho).
cplx pair_moment(const Observable &a, const Observable &b, const QuantumState &s);
/// sqrt(<A^2> - <A>^2) with round-off below zero clipped.
double deviation(const Observable &a, const QuantumState &s);

/// Moments for a fixed state and observable list. Indices are 0-based.
struct CorrelationData {
    std::size_t dim = 0;
    std::size_t k = 0;
    std::vector<double> means;
    std::vector<cplx> pair_moments;  // k x k row-major, <A_i A_j>
    std::vector<double> deviations;
    std::vector<cplx> alphas;  // <A_i A_j> - <A_i><A_j>

    cplx pair(std::size_t i, std::size_t j) const {
        return pair_moments[i * k + j];
    }
    cplx alpha(std::size_t i, std::size_t j) const {
        return alphas[i * k + j];
    }
    double deviation_product() const;
};

CorrelationData correlations(std::span<const Observable> observables, const QuantumState &s);

/// Observables and a pure state on the Hilbert-Schmidt space.
struct PureInstance {
    std::vector<Observable> observables;
    QuantumState state;
};

/// A -> kron(A, I_d), rho -> vec(sqrt(rho)) on dimension d^2. Moments are preserved:
/// <L_A> = <A>, <L_A L_B> = <AB>.
PureInstance lift_mixed(std::span<const Observable> observables, const QuantumState &s);

/// Pure states pass through unchanged; every other kind goes through lift_mixed.
PureInstance as_pure_instance(std::span<const Observable> observables, const QuantumState &s);

/// Throws DimensionMismatch unless every observable matches the state dimension.
void require_same_dimension(std::span<const Observable> observables, const QuantumState &s);

}  // namespace qunc

#endif
