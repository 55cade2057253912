#include "montesinos/report.hpp"

#include <algorithm>
#include <sstream>

namespace montesinos {

namespace {

nlohmann::ordered_json weights_json(const EdgepathSystem& system) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Weights& w : system.weights)
        arr.push_back({{"x", w.x.str()}, {"y", w.y.str()}});
    return arr;
}

nlohmann::ordered_json paths_json(const EdgepathSystem& system) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Edgepath& p : system.paths)
        arr.push_back(p.str());
    return arr;
}

std::string r_cycle_str(const EdgepathSystem& system) {
    for (const Edgepath& p : system.paths)
        if (p.constant())
            return "";
    std::string out = "(";
    std::vector<BigInt> cycle = r_cycle(system);
    for (std::size_t i = 0; i < cycle.size(); ++i)
        out += (i ? "," : "") + cycle[i].str();
    return out + ")";
}

}  // namespace

nlohmann::ordered_json surface_record(const CandidateSurface& surface) {
    nlohmann::ordered_json j;
    j["knot"] = surface.system.knot.str();
    j["paths"] = paths_json(surface.system);
    j["sheets"] = surface.system.sheets.str();
    j["twist"] = surface.twist.str();
    j["slope_denominator"] = surface.slope_denominator.str();
    j["boundary_components"] = surface.boundary_components.str();
    j["euler_characteristic"] = surface.euler_characteristic.str();
    j["genus"] = surface.genus ? nlohmann::ordered_json(surface.genus->str())
                               : nlohmann::ordered_json(nullptr);
    j["incompressible"] = to_string(surface.incompressible);
    j["orientable"] = to_string(surface.orientable);
    j["weights"] = weights_json(surface.system);
    j["r_cycle"] = r_cycle_str(surface.system);
    j["pattern_ambiguous"] = surface.pattern_ambiguous;
    return j;
}

std::vector<std::string> surface_csv_header() {
    return {"knot",
            "paths",
            "sheets",
            "twist",
            "slope_denominator",
            "boundary_components",
            "euler_characteristic",
            "genus",
            "incompressible",
            "orientable"};
}

std::vector<std::string> surface_csv_row(const CandidateSurface& surface) {
    return {surface.system.knot.str(),
            surface.system.paths_str(),
            surface.system.sheets.str(),
            surface.twist.str(),
            surface.slope_denominator.str(),
            surface.boundary_components.str(),
            surface.euler_characteristic.str(),
            surface.genus ? surface.genus->str() : "",
            to_string(surface.incompressible),
            to_string(surface.orientable)};
}

std::string render_csv(const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream out;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i)
                out << ',';
            bool quote = row[i].find_first_of(",\"\n") != std::string::npos;
            if (!quote) {
                out << row[i];
                continue;
            }
            out << '"';
            for (char c : row[i]) {
                if (c == '"')
                    out << '"';
                out << c;
            }
            out << '"';
        }
        out << '\n';
    }
    return out.str();
}

std::string render_table(const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty())
        return "";
    std::vector<std::size_t> width;
    for (const auto& row : rows) {
        width.resize(std::max(width.size(), row.size()), 0);
        for (std::size_t i = 0; i < row.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    }
    std::ostringstream out;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i)
                out << "  ";
            out << row[i];
            if (i + 1 < row.size())
                out << std::string(width[i] - row[i].size(), ' ');
        }
        out << '\n';
    }
    return out.str();
}

nlohmann::ordered_json realization_record(const RealizationResult& result) {
    nlohmann::ordered_json j;
    j["requested_boundary_components"] = result.surface.boundary_components.str();
    j["requested_slope_denominator"] = result.surface.slope_denominator.str();
    j["family"] = result.family == RealizationFamily::even_n ? "even-n" : "odd-n";
    j["surface"] = surface_record(result.surface);
    return j;
}

nlohmann::ordered_json report_record(const std::vector<CheckResult>& results) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const CheckResult& r : results)
        arr.push_back({{"check", r.name}, {"status", to_string(r.status)}, {"detail", r.detail}});
    return arr;
}

}  // namespace montesinos
