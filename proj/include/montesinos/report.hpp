#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "montesinos/realize.hpp"
#include "montesinos/surface.hpp"

namespace montesinos {

// Flat record with the stable field names used by every output format.
// Numbers are serialized as exact decimal strings and fractions as reduced
// "p/q"; the twist field is the raw total twist (unnormalized: it agrees
// with the boundary slope only modulo 1, so only its denominator is a
// certified slope invariant).
nlohmann::ordered_json surface_record(const CandidateSurface& surface);

std::vector<std::string> surface_csv_header();
std::vector<std::string> surface_csv_row(const CandidateSurface& surface);

std::string render_csv(const std::vector<std::vector<std::string>>& rows);
std::string render_table(const std::vector<std::vector<std::string>>& rows);

nlohmann::ordered_json realization_record(const RealizationResult& result);
nlohmann::ordered_json report_record(const std::vector<CheckResult>& results);

}  // namespace montesinos
