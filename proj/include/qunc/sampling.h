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

#ifndef QUNC_SAMPLING_H
#define QUNC_SAMPLING_H

#include <array>
#include <cstddef>
#include <random>

#include "qunc/linalg.h"

namespace qunc {

/// All randomness in the library flows through explicitly seeded engines of this type.
using Rng = std::mt19937_64;

/// Entries i.i.d. standard complex normal (real and imaginary parts N(0, 1/2)).
CVector random_complex_normal(std::size_t n, Rng &rng);
/// Normalized complex-normal vector (unitarily invariant pure state).
CVector random_unit_vector(std::size_t d, Rng &rng);
/// (G + G^dagger) / 2 for a complex-normal G, times `scale`.
ComplexMatrix random_hermitian(std::size_t d, Rng &rng, double scale = 1.0);
/// G G^dagger / Tr(G G^dagger) for a complex-normal G.
ComplexMatrix random_density(std::size_t d, Rng &rng);
/// Q from a modified Gram-Schmidt QR of a complex-normal matrix, phases fixed.
ComplexMatrix random_unitary(std::size_t d, Rng &rng);
/// Uniform in the unit ball.
std::array<double, 3> random_bloch_ball(Rng &rng);
/// Uniform on the unit sphere.
std::array<double, 3> random_bloch_sphere(Rng &rng);

}  // namespace qunc

#endif
