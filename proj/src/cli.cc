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

#include "qunc/cli.h"

#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qunc/bounds.h"
#include "qunc/error.h"
#include "qunc/io.h"
#include "qunc/linalg.h"
#include "qunc/search.h"
#include "qunc/verify.h"

namespace qunc {

namespace {

enum class Format { Text, Json, Csv };

const std::map<std::string, Format> kFormats = {{"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};

struct BoundsArgs {
    std::vector<std::string> inputs;
    Format format = Format::Text;
    bool permute = false;
    bool no_sweep = false;
    double ordering_tolerance = kOrderingTolerance;
};

struct RadiusArgs {
    std::string input;
    Format format = Format::Text;
    int grid = RadiusOptions{}.coarse_grid;
    double refine = RadiusOptions{}.refine_tolerance;
};

struct VerifyArgs {
    std::string suite;
    Format format = Format::Text;
    std::uint64_t seed = 0;
    std::optional<std::size_t> samples;
    std::optional<double> tolerance_override;
    int grid = PauliSuiteConfig{}.grid_resolution;
};

struct SearchArgs {
    std::string input;
    Format format = Format::Json;
    std::uint64_t seed = 0;
    std::size_t samples = SearchConfig{}.samples;
    int refine = 0;
    std::string target = "theorem22";
};

void add_format(CLI::App *cmd, Format &format) {
    cmd->add_option("--format", format, "Output format: text, json or csv")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
}

int cmd_bounds(const BoundsArgs &args, std::ostream &out, std::ostream &err) {
    ReportOptions opts;
    opts.permute = args.permute;
    opts.sweep_oracle = !args.no_sweep;
    opts.ordering_tolerance = args.ordering_tolerance;
    std::vector<std::pair<std::string, BoundReport>> reports;
    for (const auto &path : args.inputs) {
        Instance inst = load_instance(path);
        reports.emplace_back(inst.id, bound_report(inst.observables, *inst.state, opts));
    }
    bool sound = true;
    switch (args.format) {
        case Format::Json: {
            nlohmann::json doc;
            if (reports.size() == 1) {
                doc = report_to_json(reports[0].first, reports[0].second);
            } else {
                doc = nlohmann::json::array();
                for (const auto &[id, r] : reports) {
                    doc.push_back(report_to_json(id, r));
                }
            }
            out << doc.dump(2) << "\n";
            break;
        }
        case Format::Csv:
            out << kReportCsvHeader << "\n";
            for (const auto &[id, r] : reports) {
                write_report_csv_row(out, id, r);
            }
            break;
        case Format::Text:
            for (const auto &[id, r] : reports) {
                write_report_text(out, id, r);
            }
            break;
    }
    for (const auto &[id, r] : reports) {
        for (const auto &v : r.violations) {
            err << "internal inconsistency in " << id << ": " << v << "\n";
        }
        sound = sound && r.violations.empty();
    }
    return sound ? kExitOk : kExitInternal;
}

int cmd_radius(const RadiusArgs &args, std::ostream &out) {
    ComplexMatrix m = parse_matrix_document(read_text_file(args.input));
    RadiusOptions opts;
    opts.coarse_grid = args.grid;
    opts.refine_tolerance = args.refine;
    double w = numerical_radius_sweep(m, opts);
    switch (args.format) {
        case Format::Json:
            out << nlohmann::json{{"radius", w}, {"grid", args.grid}, {"refine", args.refine}, {"dimension", m.rows()}}
                       .dump(2)
                << "\n";
            break;
        case Format::Csv:
            out << "dimension,grid,refine,radius\n"
                << m.rows() << "," << args.grid << "," << format_double(args.refine) << "," << format_double(w) << "\n";
            break;
        case Format::Text:
            out << format_double(w) << "\n";
            break;
    }
    return kExitOk;
}

int cmd_verify(const VerifyArgs &args, std::ostream &out) {
    SuiteReport report;
    if (args.suite == "pauli") {
        PauliSuiteConfig cfg;
        cfg.seed = args.seed;
        cfg.grid_resolution = args.grid;
        if (args.samples) {
            cfg.ball_samples = *args.samples;
        }
        if (args.tolerance_override) {
            cfg.inequality_tolerance = *args.tolerance_override;
            cfg.equality_tolerance = *args.tolerance_override;
            cfg.grid_tolerance = *args.tolerance_override;
        }
        report = pauli_suite(cfg);
    } else {
        PropertiesConfig cfg;
        cfg.seed = args.seed;
        if (args.samples) {
            cfg.samples = *args.samples;
        }
        cfg.tolerance_override = args.tolerance_override;
        report = properties_suite(cfg);
    }
    switch (args.format) {
        case Format::Json:
            out << suite_to_json(report).dump(2) << "\n";
            break;
        case Format::Csv:
            write_suite_csv(out, report);
            break;
        case Format::Text:
            write_suite_text(out, report);
            break;
    }
    return report.passed() ? kExitOk : kExitCheckFailed;
}

int cmd_search(const SearchArgs &args, std::ostream &out) {
    Instance inst = load_instance(args.input, false);
    SearchConfig cfg;
    cfg.seed = args.seed;
    cfg.samples = args.samples;
    cfg.refine_steps = args.refine;
    cfg.target = parse_search_target(args.target);
    TightnessResult result = tightness_search(inst.observables, cfg);
    switch (args.format) {
        case Format::Json:
            out << search_to_json(result, cfg).dump(2) << "\n";
            break;
        case Format::Csv:
            out << "id,target,seed,samples,refine,product,bound,ratio\n"
                << inst.id << "," << search_target_name(cfg.target) << "," << cfg.seed << "," << cfg.samples << ","
                << cfg.refine_steps << "," << format_double(result.product) << "," << format_double(result.bound)
                << "," << format_double(result.ratio) << "\n";
            break;
        case Format::Text:
            out << "instance " << inst.id << ": target " << search_target_name(cfg.target) << "\n"
                << "  best ratio   " << format_double(result.ratio) << "\n"
                << "  product      " << format_double(result.product) << "\n"
                << "  bound        " << format_double(result.bound) << "\n"
                << "  evaluated    " << result.trace.evaluated << " (skipped " << result.trace.skipped << ")\n"
                << "  refinements  " << result.trace.refine_accepted << " accepted\n";
            break;
    }
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Uncertainty-relation bounds from numerical radii of commutator chains", "qunc"};
    app.require_subcommand(1);

    BoundsArgs bounds;
    auto *bounds_cmd = app.add_subcommand("bounds", "Deviation product and lower bounds for instance files");
    bounds_cmd->add_option("inputs", bounds.inputs, "Instance JSON files")->required()->check(CLI::ExistingFile);
    add_format(bounds_cmd, bounds.format);
    bounds_cmd->add_flag("--permute", bounds.permute, "Maximize the chain radius over observable orderings");
    bounds_cmd->add_flag("--no-sweep", bounds.no_sweep, "Skip the angular-sweep oracle");
    bounds_cmd->add_option("--ordering-tolerance", bounds.ordering_tolerance, "Ordering check tolerance")->group("");

    RadiusArgs radius;
    auto *radius_cmd = app.add_subcommand("radius", "Numerical radius of a square matrix");
    radius_cmd->add_option("input", radius.input, "Matrix JSON file")->required()->check(CLI::ExistingFile);
    add_format(radius_cmd, radius.format);
    radius_cmd->add_option("--grid", radius.grid, "Coarse angular grid size")->check(CLI::PositiveNumber);
    radius_cmd->add_option("--refine", radius.refine, "Golden-section interval width")->check(CLI::PositiveNumber);

    VerifyArgs verify;
    auto *verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("--suite", verify.suite, "pauli or properties")
        ->required()
        ->check(CLI::IsMember({"pauli", "properties"}));
    add_format(verify_cmd, verify.format);
    verify_cmd->add_option("--seed", verify.seed, "RNG seed");
    verify_cmd->add_option("--samples", verify.samples, "Random samples (ball points for pauli)");
    verify_cmd->add_option("--grid", verify.grid, "Bloch grid resolution for pauli")->check(CLI::Range(8, 4096));
    verify_cmd->add_option("--tolerance-override", verify.tolerance_override, "Replace every check tolerance")
        ->group("");

    SearchArgs search;
    auto *search_cmd = app.add_subcommand("search", "Random search for states where a bound is tight");
    search_cmd->add_option("input", search.input, "Instance JSON file")->required()->check(CLI::ExistingFile);
    add_format(search_cmd, search.format);
    search_cmd->add_option("--seed", search.seed, "RNG seed");
    search_cmd->add_option("--samples", search.samples, "Number of random pure states")->check(CLI::PositiveNumber);
    search_cmd->add_option("--refine", search.refine, "Hill-climbing steps")->check(CLI::NonNegativeNumber);
    search_cmd->add_option("--target", search.target, "theorem22, theorem41 or theorem43")
        ->check(CLI::IsMember({"theorem22", "theorem41", "theorem43"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    }

    try {
        if (*bounds_cmd) {
            return cmd_bounds(bounds, out, err);
        }
        if (*radius_cmd) {
            return cmd_radius(radius, out);
        }
        if (*verify_cmd) {
            return cmd_verify(verify, out);
        }
        return cmd_search(search, out);
    } catch (const Error &e) {
        err << "error [" << error_kind_name(e.kind()) << "]: " << e.message() << "\n";
        return e.is_internal() ? kExitInternal : kExitInvalid;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace qunc
