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

#include "qunc/sampling.h"

#include <cmath>

namespace qunc {

CVector random_complex_normal(std::size_t n, Rng &rng) {
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    CVector out(n);
    for (auto &e : out) {
        double re = normal(rng);
        double im = normal(rng);
        e = {re, im};
    }
    return out;
}

CVector random_unit_vector(std::size_t d, Rng &rng) {
    CVector v = random_complex_normal(d, rng);
    double n = norm(v);
    for (auto &e : v) {
        e /= n;
    }
    return v;
}

ComplexMatrix random_hermitian(std::size_t d, Rng &rng, double scale) {
    ComplexMatrix g(d, d, random_complex_normal(d * d, rng));
    ComplexMatrix h = hermitian_part(g);
    h *= scale;
    return h;
}

ComplexMatrix random_density(std::size_t d, Rng &rng) {
    ComplexMatrix g(d, d, random_complex_normal(d * d, rng));
    ComplexMatrix w = g * g.adjoint();
    w *= 1.0 / w.trace().real();
    return hermitian_part(w);
}

ComplexMatrix random_unitary(std::size_t d, Rng &rng) {
    ComplexMatrix g(d, d, random_complex_normal(d * d, rng));
    std::vector<CVector> cols;
    for (std::size_t c = 0; c < d; c++) {
        CVector v = g.column(c);
        for (const auto &q : cols) {
            cplx overlap = inner(q, v);
            for (std::size_t r = 0; r < d; r++) {
                v[r] -= overlap * q[r];
            }
        }
        double n = norm(v);
        for (auto &e : v) {
            e /= n;
        }
        cols.push_back(std::move(v));
    }
    ComplexMatrix q(d, d);
    for (std::size_t c = 0; c < d; c++) {
        for (std::size_t r = 0; r < d; r++) {
            q(r, c) = cols[c][r];
        }
    }
    return q;
}

std::array<double, 3> random_bloch_sphere(Rng &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    std::array<double, 3> r{};
    double n = 0;
    do {
        for (auto &c : r) {
            c = normal(rng);
        }
        n = std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]);
    } while (n == 0);
    for (auto &c : r) {
        c /= n;
    }
    return r;
}

std::array<double, 3> random_bloch_ball(Rng &rng) {
    std::array<double, 3> r = random_bloch_sphere(rng);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double radius = std::cbrt(unit(rng));
    for (auto &c : r) {
        c *= radius;
    }
    return r;
}

}  // namespace qunc
