# Copyright 2026 The qunc Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Uncertainty-relation lower bounds from numerical radii of commutator chains."""

import json

from qunc._core import (
    QuncError,
    chain_matrix,
    deviation_product,
    hermitian_eigenvalues,
    numerical_radius,
    operator_norm,
    singular_values,
    theorem22,
)
from qunc import _core

__all__ = [
    "QuncError",
    "bounds",
    "chain_matrix",
    "deviation_product",
    "hermitian_eigenvalues",
    "numerical_radius",
    "operator_norm",
    "search",
    "singular_values",
    "theorem22",
    "verify",
]


def bounds(instance, permute=False):
    """Bound report for an instance given as a dict in the JSON file layout."""
    return json.loads(_core.bounds_json(json.dumps(instance), permute))


def search(instance, samples=1000, seed=0, refine=0, target="theorem22"):
    return json.loads(_core.search_json(json.dumps(instance), samples, seed, refine, target))


def verify(suite, seed=0, samples=100):
    return json.loads(_core.verify_json(suite, seed, samples))
