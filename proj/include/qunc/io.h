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

#ifndef QUNC_IO_H
#define QUNC_IO_H

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qunc/bounds.h"
#include "qunc/quantum.h"
#include "qunc/search.h"
#include "qunc/suite.h"

namespace qunc {

/// A problem instance as stored on disk:
///
///   {"id": "optional label",
///    "dimension": d,
///    "observables": [{"name": "A", "matrix": [[[re, im], ...], ...]}, ...],
///    "state": {"pure": [[re, im], ...]} | {"density": [[[re, im], ...], ...]} | {"bloch": [r1, r2, r3]}}
///
/// Matrices are row-major. A bare number is accepted wherever a complex
/// entry is expected and read as a real value.
struct Instance {
    std::string id;
    std::size_t dimension = 0;
    std::vector<Observable> observables;
    std::optional<QuantumState> state;
};

/// Parses and validates an instance. Syntax errors raise ParseError with the
/// line and column; shape problems raise ValidationError naming the JSON
/// path; physics violations keep their own kind with the path prepended.
Instance parse_instance(std::string_view text, bool require_state = true);
Instance load_instance(const std::string &path, bool require_state = true);

nlohmann::json instance_to_json(const Instance &instance);

/// Reads {"matrix": [[...]]} or a bare nested array of complex entries.
ComplexMatrix parse_matrix_document(std::string_view text);

nlohmann::json complex_to_json(cplx z);
nlohmann::json vector_to_json(std::span<const cplx> v);
nlohmann::json matrix_to_json(const ComplexMatrix &m);

std::string read_text_file(const std::string &path);

/// CSV header shared by every bounds report row.
extern const char *const kReportCsvHeader;

nlohmann::json report_to_json(const std::string &id, const BoundReport &report);
void write_report_text(std::ostream &out, const std::string &id, const BoundReport &report);
void write_report_csv_row(std::ostream &out, const std::string &id, const BoundReport &report);

nlohmann::json suite_to_json(const SuiteReport &report);
void write_suite_text(std::ostream &out, const SuiteReport &report);
void write_suite_csv(std::ostream &out, const SuiteReport &report);

nlohmann::json search_to_json(const TightnessResult &result, const SearchConfig &cfg);

/// Shortest decimal text that reads back to the same double.
std::string format_double(double value);

}  // namespace qunc

#endif
