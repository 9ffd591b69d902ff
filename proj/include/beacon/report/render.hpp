#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "beacon/identification.hpp"
#include "beacon/report/config.hpp"

namespace beacon::report {

inline constexpr std::string_view kSweepCsvHeader =
    "elevation_rad,start_time_s,ttr_ssr_s,ttr_jdr_s,ttr_eff_ssr_s,ttr_eff_jdr_s,atw_ssr_s,"
    "atw_jdr_s";

// Shortest decimal that round-trips; "inf"/"-inf"/"nan" for non-finite values.
std::string format_double(double v);

// Values as printed in the published comparison table, keyed by row name.
struct PublishedRow {
    std::string_view name;
    double capacity_classical;
    double capacity_quantum;
    double ttr_classical;
    double ttr_quantum;
};

const std::array<PublishedRow, 5>& published_table();

// True when any of the four numbers is more than `tolerance` (relative) away
// from the published row of the same name. Rows with no published match
// are never flagged.
bool deviates_from_published(const ScenarioRow& row, double tolerance = 0.05);

nlohmann::json to_json(const ScenarioRow& row);
ScenarioRow scenario_row_from_json(const nlohmann::json& j);

std::string render_scenario_table(std::span<const ScenarioRow> rows, OutputFormat format);

std::string render_sweep_csv(std::span<const SweepPoint> points);

std::string csv_escape(std::string_view field);

}  // namespace beacon::report
