#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "montesinos/notation.hpp"
#include "montesinos/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

struct OutputMode {
    bool json = false;
    bool csv = false;
};

void add_format_flags(CLI::App* cmd, OutputMode& mode) {
    auto* json = cmd->add_flag("--json", mode.json, "emit JSON");
    cmd->add_flag("--csv", mode.csv, "emit CSV")->excludes(json);
}

void print_surfaces(const std::vector<montesinos::CandidateSurface>& surfaces,
                    const OutputMode& mode) {
    using montesinos::surface_csv_header;
    using montesinos::surface_csv_row;
    if (mode.json) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& s : surfaces)
            arr.push_back(montesinos::surface_record(s));
        std::cout << arr.dump(2) << "\n";
        return;
    }
    std::vector<std::vector<std::string>> rows{surface_csv_header()};
    for (const auto& s : surfaces)
        rows.push_back(surface_csv_row(s));
    if (mode.csv) {
        std::cout << montesinos::render_csv(rows);
        return;
    }
    std::cout << montesinos::render_table(rows);
    std::cout << "(twist is raw and unnormalized: it matches the boundary slope only "
                 "modulo 1, so only its denominator is a slope invariant)\n";
}

int run_slopes(const std::string& knot_text, int max_edges, const OutputMode& mode) {
    montesinos::MontesinosKnot knot = montesinos::parse_knot(knot_text);
    montesinos::SweepOptions opts;
    opts.max_edges = max_edges;
    std::vector<montesinos::CandidateSurface> surfaces;
    for (const auto& system : montesinos::sweep_systems(knot, opts))
        surfaces.push_back(montesinos::analyze(system));
    print_surfaces(surfaces, mode);
    return kExitOk;
}

int run_enumerate(const std::string& tangle_text, int max_edges, const OutputMode& mode) {
    montesinos::Tangle tangle{montesinos::Fraction::parse(tangle_text)};
    auto paths = montesinos::enumerate_edgepaths(tangle, max_edges);
    if (mode.json) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& p : paths)
            arr.push_back(p.str());
        std::cout << arr.dump(2) << "\n";
        return kExitOk;
    }
    for (const auto& p : paths)
        std::cout << p.str() << "\n";
    return kExitOk;
}

int run_realize(long long b, long long q, const OutputMode& mode) {
    montesinos::RealizationRequest request{montesinos::BigInt(b), montesinos::BigInt(q)};
    montesinos::RealizationResult result;
    try {
        result = montesinos::realize(request);
    } catch (const montesinos::RealizationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == montesinos::RealizationError::Kind::invalid_request
                   ? kExitUsage
                   : kExitVerificationFailure;
    }
    if (mode.json) {
        std::cout << montesinos::realization_record(result).dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "knot: " << result.knot.str() << "\n";
    print_surfaces({result.surface}, mode);
    return kExitOk;
}

int run_verify(const OutputMode& mode) {
    std::vector<montesinos::CheckResult> report = montesinos::verify_paper();
    if (mode.json) {
        std::cout << montesinos::report_record(report).dump(2) << "\n";
    } else {
        std::vector<std::vector<std::string>> rows{{"status", "check", "detail"}};
        for (const auto& r : report)
            rows.push_back({to_string(r.status), r.name, r.detail});
        std::cout << montesinos::render_table(rows);
    }
    return montesinos::all_passed(report) ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"candidate essential surfaces of Montesinos knots via edgepath systems"};
    app.require_subcommand(1);
    app.fallthrough();  // app-level flags may follow the subcommand

    int max_edges = 64;
    app.add_option("--max-edges", max_edges, "edgepath search depth guard")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);

    OutputMode slopes_mode, enum_mode, realize_mode, verify_mode;
    std::string knot_text, tangle_text;
    long long realize_b = 0, realize_q = 0;

    auto* slopes = app.add_subcommand(
        "slopes", "enumerate and analyze every solvable edgepath system of a knot");
    slopes->add_option("knot", knot_text, "knot notation, e.g. \"P(-3,3,7)\" or \"M(1/3,1/3,-2/5)\"")
        ->required();
    add_format_flags(slopes, slopes_mode);

    auto* enumerate = app.add_subcommand("enumerate", "list admissible edgepaths of one tangle");
    enumerate->add_option("tangle", tangle_text, "tangle slope, e.g. \"1/7\"")->required();
    add_format_flags(enumerate, enum_mode);

    auto* realize = app.add_subcommand(
        "realize", "construct and verify a knot whose surface has b boundary components "
                   "and slope denominator q");
    realize->add_option("b", realize_b, "boundary components (even, >= 2)")->required();
    realize->add_option("q", realize_q, "slope denominator (>= 1)")->required();
    add_format_flags(realize, realize_mode);

    auto* verify = app.add_subcommand("verify-paper", "run the desk-scale verification grids");
    add_format_flags(verify, verify_mode);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (slopes->parsed())
            return run_slopes(knot_text, max_edges, slopes_mode);
        if (enumerate->parsed())
            return run_enumerate(tangle_text, max_edges, enum_mode);
        if (realize->parsed())
            return run_realize(realize_b, realize_q, realize_mode);
        if (verify->parsed())
            return run_verify(verify_mode);
    } catch (const montesinos::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
    return kExitUsage;
}
