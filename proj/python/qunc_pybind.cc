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

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qunc/bounds.h"
#include "qunc/chain.h"
#include "qunc/error.h"
#include "qunc/io.h"
#include "qunc/linalg.h"
#include "qunc/search.h"
#include "qunc/verify.h"

namespace py = pybind11;

namespace {

using ComplexArray = py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>;

qunc::ComplexMatrix to_matrix(const ComplexArray &a) {
    if (a.ndim() != 2) {
        throw py::value_error("expected a 2-d array");
    }
    auto rows = static_cast<std::size_t>(a.shape(0));
    auto cols = static_cast<std::size_t>(a.shape(1));
    std::vector<qunc::cplx> entries(a.data(), a.data() + rows * cols);
    return qunc::ComplexMatrix(rows, cols, std::move(entries));
}

qunc::CVector to_vector(const ComplexArray &a) {
    if (a.ndim() != 1) {
        throw py::value_error("expected a 1-d array");
    }
    return qunc::CVector(a.data(), a.data() + a.shape(0));
}

ComplexArray from_matrix(const qunc::ComplexMatrix &m) {
    ComplexArray out({m.rows(), m.cols()});
    auto view = out.mutable_unchecked<2>();
    for (std::size_t r = 0; r < m.rows(); r++) {
        for (std::size_t c = 0; c < m.cols(); c++) {
            view(r, c) = m(r, c);
        }
    }
    return out;
}

std::vector<qunc::Observable> to_observables(const std::vector<ComplexArray> &mats) {
    std::vector<qunc::Observable> out;
    for (std::size_t i = 0; i < mats.size(); i++) {
        out.emplace_back("A" + std::to_string(i + 1), to_matrix(mats[i]));
    }
    return out;
}

qunc::RadiusOptions radius_options(int grid, double refine) {
    qunc::RadiusOptions opts;
    opts.coarse_grid = grid;
    opts.refine_tolerance = refine;
    return opts;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Numerical-radius uncertainty bounds (C++ core).";

    py::register_exception<qunc::Error>(m, "QuncError", PyExc_ValueError);

    m.def(
        "numerical_radius",
        [](const ComplexArray &a, int grid, double refine) {
            return qunc::numerical_radius_sweep(to_matrix(a), radius_options(grid, refine));
        },
        py::arg("matrix"), py::arg("grid") = 1024, py::arg("refine") = 1e-12);
    m.def(
        "hermitian_eigenvalues",
        [](const ComplexArray &a) {
            return qunc::hermitian_eigenvalues(to_matrix(a));
        },
        py::arg("matrix"));
    m.def(
        "singular_values",
        [](const ComplexArray &a) {
            return qunc::singular_values(to_matrix(a));
        },
        py::arg("matrix"));
    m.def(
        "operator_norm",
        [](const ComplexArray &a) {
            return qunc::operator_norm(to_matrix(a));
        },
        py::arg("matrix"));
    m.def(
        "chain_matrix",
        [](const std::vector<ComplexArray> &observables, const ComplexArray &x) {
            auto obs = to_observables(observables);
            return from_matrix(qunc::chain_direct(obs, qunc::QuantumState::pure(to_vector(x))));
        },
        py::arg("observables"), py::arg("state"));
    m.def(
        "theorem22",
        [](const std::vector<ComplexArray> &observables, const ComplexArray &x) {
            auto obs = to_observables(observables);
            return qunc::theorem22(obs, qunc::QuantumState::pure(to_vector(x)));
        },
        py::arg("observables"), py::arg("state"));
    m.def(
        "deviation_product",
        [](const std::vector<ComplexArray> &observables, const ComplexArray &x) {
            auto obs = to_observables(observables);
            return qunc::correlations(obs, qunc::QuantumState::pure(to_vector(x))).deviation_product();
        },
        py::arg("observables"), py::arg("state"));
    m.def(
        "bounds_json",
        [](const std::string &instance_json, bool permute) {
            qunc::Instance inst = qunc::parse_instance(instance_json);
            qunc::ReportOptions opts;
            opts.permute = permute;
            return qunc::report_to_json(inst.id, qunc::bound_report(inst.observables, *inst.state, opts)).dump();
        },
        py::arg("instance_json"), py::arg("permute") = false);
    m.def(
        "search_json",
        [](const std::string &instance_json, std::size_t samples, std::uint64_t seed, int refine,
           const std::string &target) {
            qunc::Instance inst = qunc::parse_instance(instance_json, false);
            qunc::SearchConfig cfg;
            cfg.samples = samples;
            cfg.seed = seed;
            cfg.refine_steps = refine;
            cfg.target = qunc::parse_search_target(target);
            return qunc::search_to_json(qunc::tightness_search(inst.observables, cfg), cfg).dump();
        },
        py::arg("instance_json"), py::arg("samples") = 1000, py::arg("seed") = 0, py::arg("refine") = 0,
        py::arg("target") = "theorem22");
    m.def(
        "verify_json",
        [](const std::string &suite, std::uint64_t seed, std::size_t samples) {
            if (suite == "pauli") {
                qunc::PauliSuiteConfig cfg;
                cfg.seed = seed;
                cfg.ball_samples = samples;
                return qunc::suite_to_json(qunc::pauli_suite(cfg)).dump();
            }
            if (suite == "properties") {
                qunc::PropertiesConfig cfg;
                cfg.seed = seed;
                cfg.samples = samples;
                return qunc::suite_to_json(qunc::properties_suite(cfg)).dump();
            }
            throw py::value_error("suite must be 'pauli' or 'properties'");
        },
        py::arg("suite"), py::arg("seed") = 0, py::arg("samples") = 100);
}
