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

#include "qunc/io.h"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "qunc/error.h"

namespace qunc {

using nlohmann::json;

namespace {

[[noreturn]] void invalid(const std::string &path, const std::string &message) {
    fail(ErrorKind::ValidationError, (path.empty() ? std::string("/") : path) + ": " + message);
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        std::size_t line = 1;
        std::size_t column = 1;
        std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t i = 0; i < end; i++) {
            if (text[i] == '\n') {
                line++;
                column = 1;
            } else {
                column++;
            }
        }
        std::ostringstream ss;
        ss << "line " << line << ", column " << column << ": " << e.what();
        fail(ErrorKind::ParseError, ss.str());
    }
}

double parse_real(const json &j, const std::string &path) {
    if (!j.is_number()) {
        invalid(path, "expected a number");
    }
    return j.get<double>();
}

cplx parse_complex(const json &j, const std::string &path) {
    if (j.is_number()) {
        return {j.get<double>(), 0};
    }
    if (!j.is_array() || j.size() != 2) {
        invalid(path, "expected a complex number [re, im]");
    }
    return {parse_real(j[0], path + "/0"), parse_real(j[1], path + "/1")};
}

CVector parse_vector(const json &j, const std::string &path) {
    if (!j.is_array() || j.empty()) {
        invalid(path, "expected a non-empty array of complex numbers");
    }
    CVector out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); i++) {
        out.push_back(parse_complex(j[i], path + "/" + std::to_string(i)));
    }
    return out;
}

ComplexMatrix parse_matrix(const json &j, const std::string &path) {
    if (!j.is_array() || j.empty()) {
        invalid(path, "expected a non-empty array of rows");
    }
    const std::size_t rows = j.size();
    std::size_t cols = 0;
    std::vector<cplx> entries;
    for (std::size_t r = 0; r < rows; r++) {
        std::string row_path = path + "/" + std::to_string(r);
        CVector row = parse_vector(j[r], row_path);
        if (r == 0) {
            cols = row.size();
        } else if (row.size() != cols) {
            invalid(row_path, "row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(cols));
        }
        entries.insert(entries.end(), row.begin(), row.end());
    }
    for (std::size_t i = 0; i < entries.size(); i++) {
        if (!std::isfinite(entries[i].real()) || !std::isfinite(entries[i].imag())) {
            invalid(path, "entries must be finite");
        }
    }
    return ComplexMatrix(rows, cols, std::move(entries));
}

void require_square_of(const ComplexMatrix &m, std::size_t d, const std::string &path) {
    if (m.rows() != d || m.cols() != d) {
        std::ostringstream ss;
        ss << "expected a " << d << "x" << d << " matrix, got " << m.rows() << "x" << m.cols();
        invalid(path, ss.str());
    }
}

// Re-raises a library error with the JSON path in front.
template <typename F>
auto at_path(const std::string &path, F &&f) {
    try {
        return f();
    } catch (const Error &e) {
        if (e.kind() == ErrorKind::ValidationError || e.kind() == ErrorKind::ParseError) {
            throw;
        }
        throw Error(e.kind(), path + ": " + e.message());
    }
}

QuantumState parse_state(const json &j, std::size_t d) {
    const std::string path = "/state";
    if (!j.is_object() || j.size() != 1) {
        invalid(path, "expected an object with exactly one of 'pure', 'density', 'bloch'");
    }
    const auto &[key, value] = *j.items().begin();
    std::string sub = path + "/" + key;
    if (key == "pure") {
        CVector v = parse_vector(value, sub);
        if (v.size() != d) {
            invalid(sub, "state vector has length " + std::to_string(v.size()) + ", expected " + std::to_string(d));
        }
        return at_path(sub, [&] {
            return QuantumState::pure(std::move(v));
        });
    }
    if (key == "density") {
        ComplexMatrix rho = parse_matrix(value, sub);
        require_square_of(rho, d, sub);
        return at_path(sub, [&] {
            return QuantumState::density(rho);
        });
    }
    if (key == "bloch") {
        if (!value.is_array() || value.size() != 3) {
            invalid(sub, "expected [r1, r2, r3]");
        }
        if (d != 2) {
            fail(ErrorKind::WrongDimension, sub + ": Bloch states need dimension 2, instance has " + std::to_string(d));
        }
        std::array<double, 3> r{};
        for (std::size_t i = 0; i < 3; i++) {
            r[i] = parse_real(value[i], sub + "/" + std::to_string(i));
        }
        return at_path(sub, [&] {
            return QuantumState::bloch(r);
        });
    }
    invalid(path, "unknown state kind '" + key + "'");
}

void write_chars(std::ostream &out, double value) {
    out << format_double(value);
}

}  // namespace

std::string format_double(double value) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        fail(ErrorKind::InvalidArgument, "cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Instance parse_instance(std::string_view text, bool require_state) {
    json root = parse_json(text);
    if (!root.is_object()) {
        invalid("", "expected a JSON object");
    }
    for (const auto &[key, value] : root.items()) {
        if (key != "id" && key != "dimension" && key != "observables" && key != "state" && key != "comment") {
            invalid("/" + key, "unknown field");
        }
    }
    Instance inst;
    if (root.contains("id")) {
        if (!root["id"].is_string()) {
            invalid("/id", "expected a string");
        }
        inst.id = root["id"].get<std::string>();
    }
    if (!root.contains("dimension")) {
        invalid("/dimension", "missing field");
    }
    const json &dim = root["dimension"];
    if (!dim.is_number_unsigned() || dim.get<std::size_t>() == 0) {
        invalid("/dimension", "expected a positive integer");
    }
    inst.dimension = dim.get<std::size_t>();

    if (!root.contains("observables")) {
        invalid("/observables", "missing field");
    }
    const json &obs = root["observables"];
    if (!obs.is_array() || obs.empty()) {
        invalid("/observables", "expected a non-empty array");
    }
    for (std::size_t i = 0; i < obs.size(); i++) {
        std::string path = "/observables/" + std::to_string(i);
        const json &entry = obs[i];
        if (!entry.is_object()) {
            invalid(path, "expected an object with 'name' and 'matrix'");
        }
        std::string name = "A" + std::to_string(i + 1);
        if (entry.contains("name")) {
            if (!entry["name"].is_string()) {
                invalid(path + "/name", "expected a string");
            }
            name = entry["name"].get<std::string>();
        }
        if (!entry.contains("matrix")) {
            invalid(path + "/matrix", "missing field");
        }
        ComplexMatrix m = parse_matrix(entry["matrix"], path + "/matrix");
        require_square_of(m, inst.dimension, path + "/matrix");
        inst.observables.push_back(at_path(path, [&] {
            return Observable(name, m);
        }));
    }

    if (root.contains("state")) {
        inst.state = parse_state(root["state"], inst.dimension);
    } else if (require_state) {
        invalid("/state", "missing field");
    }
    return inst;
}

Instance load_instance(const std::string &path, bool require_state) {
    Instance inst = parse_instance(read_text_file(path), require_state);
    if (inst.id.empty()) {
        std::string stem = path;
        std::size_t slash = stem.find_last_of("/\\");
        if (slash != std::string::npos) {
            stem = stem.substr(slash + 1);
        }
        std::size_t dot = stem.rfind('.');
        if (dot != std::string::npos && dot > 0) {
            stem = stem.substr(0, dot);
        }
        inst.id = stem;
    }
    return inst;
}

json complex_to_json(cplx z) {
    return json::array({z.real(), z.imag()});
}

json vector_to_json(std::span<const cplx> v) {
    json out = json::array();
    for (cplx z : v) {
        out.push_back(complex_to_json(z));
    }
    return out;
}

json matrix_to_json(const ComplexMatrix &m) {
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); r++) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); c++) {
            row.push_back(complex_to_json(m(r, c)));
        }
        out.push_back(std::move(row));
    }
    return out;
}

json instance_to_json(const Instance &instance) {
    json out = json::object();
    if (!instance.id.empty()) {
        out["id"] = instance.id;
    }
    out["dimension"] = instance.dimension;
    json obs = json::array();
    for (const auto &a : instance.observables) {
        obs.push_back({{"name", a.name()}, {"matrix", matrix_to_json(a.matrix())}});
    }
    out["observables"] = std::move(obs);
    if (instance.state) {
        const QuantumState &s = *instance.state;
        switch (s.kind()) {
            case StateKind::Pure:
                out["state"] = {{"pure", vector_to_json(s.vector())}};
                break;
            case StateKind::Density:
                out["state"] = {{"density", matrix_to_json(s.density_matrix())}};
                break;
            case StateKind::Bloch: {
                const auto &r = s.bloch_vector();
                out["state"] = {{"bloch", json::array({r[0], r[1], r[2]})}};
                break;
            }
        }
    }
    return out;
}

ComplexMatrix parse_matrix_document(std::string_view text) {
    json root = parse_json(text);
    if (root.is_object()) {
        if (!root.contains("matrix")) {
            invalid("/matrix", "missing field");
        }
        return parse_matrix(root["matrix"], "/matrix");
    }
    return parse_matrix(root, "");
}

const char *const kReportCsvHeader = "id,k,d,product,w_id,w_perm,t22,chain,norm,ratio";

json report_to_json(const std::string &id, const BoundReport &r) {
    json out = json::object();
    out["id"] = id;
    out["k"] = r.k;
    out["dimension"] = r.dim;
    out["state_kind"] = std::string(state_kind_name(r.state_kind));
    out["lifted"] = r.lifted;
    out["observables"] = r.names;
    out["deviations"] = r.deviations;
    out["product"] = r.deviation_product;

    json radius = json::object();
    radius["identity"] = r.radius_exact_id;
    radius["sweep"] = r.radius_sweep_id ? json(*r.radius_sweep_id) : json(nullptr);
    if (r.radius_permuted) {
        radius["permuted"] = {{"value", r.radius_permuted->value}, {"permutation", r.radius_permuted->permutation}};
    } else {
        radius["permuted"] = nullptr;
    }
    out["radius"] = std::move(radius);

    json bounds = json::object();
    bounds["theorem22"] = r.bound_theorem22;
    bounds["robertson_chain"] = r.bound_robertson_chain;
    if (r.bound_schrodinger) {
        bounds["schrodinger"] = {
            {"value", r.bound_schrodinger->value},
            {"radical", r.bound_schrodinger->radical},
            {"robertson", r.bound_schrodinger->robertson}};
    }
    if (r.bound_theorem41) {
        json t = {{"general", r.bound_theorem41->general}, {"general_squared", r.bound_theorem41->general_squared}};
        t["special"] = r.bound_theorem41->special ? json(*r.bound_theorem41->special) : json(nullptr);
        bounds["theorem41"] = std::move(t);
    }
    if (r.bound_theorem43) {
        bounds["theorem43"] = *r.bound_theorem43;
    }
    out["bounds"] = std::move(bounds);

    out["norm"] = {
        {"value", r.norm_based.norm},
        {"branch", std::string(norm_branch_name(r.norm_based.branch))},
        {"direct", r.norm_based.norm_direct},
        {"product_formula", r.norm_based.appendix_claim},
        {"product_formula_holds", r.norm_based.claim_holds}};
    out["flags"] = {
        {"product_equals_norm", r.flags.product_equals_norm},
        {"norm_equals_radius", r.flags.norm_equals_radius},
        {"equality", r.flags.equality},
        {"theorem22_tight", r.flags.theorem22_tight}};
    out["ratio"] = r.ratio;
    out["violations"] = r.violations;
    return out;
}

void write_report_text(std::ostream &out, const std::string &id, const BoundReport &r) {
    out << "instance " << id << ": k = " << r.k << ", d = " << r.dim << ", state " << state_kind_name(r.state_kind)
        << (r.lifted ? " (lifted)" : "") << "\n";
    for (std::size_t i = 0; i < r.k; i++) {
        out << "  Delta(" << r.names[i] << ") = " << format_double(r.deviations[i]) << "\n";
    }
    out << "  product             " << format_double(r.deviation_product) << "\n";
    if (r.radius_permuted) {
        out << "  radius permuted     " << format_double(r.radius_permuted->value) << "  order";
        for (int p : r.radius_permuted->permutation) {
            out << " " << r.names[p];
        }
        out << "\n";
    }
    out << "  radius identity     " << format_double(r.radius_exact_id) << "\n";
    if (r.radius_sweep_id) {
        out << "  radius sweep        " << format_double(*r.radius_sweep_id) << "\n";
    }
    out << "  theorem22           " << format_double(r.bound_theorem22) << "\n";
    out << "  robertson chain     " << format_double(r.bound_robertson_chain) << "\n";
    if (r.bound_schrodinger) {
        out << "  schrodinger         " << format_double(r.bound_schrodinger->value) << "\n";
        out << "  robertson           " << format_double(r.bound_schrodinger->robertson) << "\n";
    }
    if (r.bound_theorem41) {
        out << "  theorem41 general   " << format_double(r.bound_theorem41->general) << "\n";
        if (r.bound_theorem41->special) {
            out << "  theorem41 special   " << format_double(*r.bound_theorem41->special) << "\n";
        }
    }
    if (r.bound_theorem43) {
        out << "  theorem43           " << format_double(*r.bound_theorem43) << "\n";
    }
    out << "  norm                " << format_double(r.norm_based.norm) << " (" << norm_branch_name(r.norm_based.branch)
        << ")\n";
    out << "  ratio               " << format_double(r.ratio) << "\n";
    out << "  equality            " << (r.flags.equality ? "yes" : "no") << ", theorem22 tight "
        << (r.flags.theorem22_tight ? "yes" : "no") << "\n";
    for (const auto &v : r.violations) {
        out << "  VIOLATION: " << v << "\n";
    }
}

void write_report_csv_row(std::ostream &out, const std::string &id, const BoundReport &r) {
    std::string quoted = id;
    if (quoted.find_first_of(",\"\n") != std::string::npos) {
        std::string escaped = "\"";
        for (char c : id) {
            escaped += c;
            if (c == '"') {
                escaped += '"';
            }
        }
        quoted = escaped + "\"";
    }
    out << quoted << "," << r.k << "," << r.dim << ",";
    write_chars(out, r.deviation_product);
    out << ",";
    write_chars(out, r.radius_exact_id);
    out << ",";
    if (r.radius_permuted) {
        write_chars(out, r.radius_permuted->value);
    }
    out << ",";
    write_chars(out, r.bound_theorem22);
    out << ",";
    write_chars(out, r.bound_robertson_chain);
    out << ",";
    write_chars(out, r.norm_based.norm);
    out << ",";
    write_chars(out, r.ratio);
    out << "\n";
}

json suite_to_json(const SuiteReport &report) {
    json checks = json::array();
    for (const auto &c : report.checks) {
        checks.push_back(
            {{"name", c.name},
             {"points", c.points},
             {"tolerance", c.tolerance},
             {"worst", c.worst},
             {"margin", c.margin},
             {"passed", c.passed}});
    }
    return {{"suite", report.suite}, {"passed", report.passed()}, {"checks", std::move(checks)}};
}

void write_suite_text(std::ostream &out, const SuiteReport &report) {
    out << "suite " << report.suite << "\n";
    std::size_t failed = 0;
    for (const auto &c : report.checks) {
        out << "  " << (c.passed ? "PASS " : "FAIL ") << c.name << "  points " << c.points << "  worst "
            << format_double(c.worst) << "  tolerance " << format_double(c.tolerance) << "  margin "
            << format_double(c.margin) << "\n";
        failed += c.passed ? 0 : 1;
    }
    out << (failed == 0 ? "all " + std::to_string(report.checks.size()) + " checks passed"
                        : std::to_string(failed) + " of " + std::to_string(report.checks.size()) + " checks failed")
        << "\n";
}

void write_suite_csv(std::ostream &out, const SuiteReport &report) {
    out << "suite,check,points,tolerance,worst,margin,passed\n";
    for (const auto &c : report.checks) {
        out << report.suite << "," << c.name << "," << c.points << "," << format_double(c.tolerance) << ","
            << format_double(c.worst) << "," << format_double(c.margin) << "," << (c.passed ? 1 : 0) << "\n";
    }
}

json search_to_json(const TightnessResult &result, const SearchConfig &cfg) {
    return {
        {"target", std::string(search_target_name(cfg.target))},
        {"seed", cfg.seed},
        {"samples", cfg.samples},
        {"refine", cfg.refine_steps},
        {"ratio", result.ratio},
        {"product", result.product},
        {"bound", result.bound},
        {"best_state", {{"pure", vector_to_json(result.best_state.vector())}}},
        {"trace",
         {{"evaluated", result.trace.evaluated},
          {"skipped", result.trace.skipped},
          {"best_sample", result.trace.best_sample},
          {"sample_ratio_min", result.trace.sample_ratio_min},
          {"sample_ratio_mean", result.trace.sample_ratio_mean},
          {"sample_ratio_max", result.trace.sample_ratio_max},
          {"refine_accepted", result.trace.refine_accepted},
          {"final_step", result.trace.final_step}}}};
}

}  // namespace qunc
