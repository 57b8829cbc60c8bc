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

#ifndef QUNC_VERIFY_H
#define QUNC_VERIFY_H

#include <cstdint>
#include <optional>
#include <vector>

#include "qunc/quantum.h"
#include "qunc/sampling.h"
#include "qunc/suite.h"

namespace qunc {

struct PropertiesConfig {
    std::uint64_t seed = 0;
    std::size_t samples = 100;
    /// Replaces every check tolerance. A negative value forces failures.
    std::optional<double> tolerance_override;
};

/// Randomized property table over the linear algebra, the chain machinery and
/// the bounds: Deltas as commutator norms, the two forms of the covariance
/// modulus, chain reconstruction and pattern, closed-form radius against the
/// angular sweep, the bound ordering for pure and mixed states, invariance
/// under purification and the 3x3 radius formula.
SuiteReport properties_suite(const PropertiesConfig &cfg = {});

struct RandomInstance {
    std::vector<Observable> observables;
    QuantumState state;
};

/// k random Hermitian observables on C^d with a Haar-like pure state, or a
/// Wishart density matrix when `mixed` is set.
RandomInstance random_instance(std::size_t d, std::size_t k, bool mixed, Rng &rng);

}  // namespace qunc

#endif
