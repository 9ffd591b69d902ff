#include "beacon/report/render.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <fmt/format.h>

namespace beacon::report {

using nlohmann::json;

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return fmt::format("{}", v);
}

const std::array<PublishedRow, 5>& published_table() {
    static const std::array<PublishedRow, 5> rows{{
        {"Zenith", 8.65, 59.27, 2.31, 0.34},
        {"Early", 2.16, 16.33, 10.39, 1.40},
        {"Horizon", 1.07, 8.46, 21.96, 2.97},
        {"Atmosphere", 0.22, 1.87, 103.97, 12.15},
        {"Adverse weather", 0.01, 0.13, 1650.35, 166.07},
    }};
    return rows;
}

bool deviates_from_published(const ScenarioRow& row, double tolerance) {
    for (const PublishedRow& p : published_table()) {
        if (p.name != row.name) continue;
        const auto off = [tolerance](double computed, double printed) {
            return !(std::abs(computed / printed - 1.0) <= tolerance);
        };
        return off(row.capacity_classical, p.capacity_classical) ||
               off(row.capacity_quantum, p.capacity_quantum) ||
               off(row.ttr_classical, p.ttr_classical) || off(row.ttr_quantum, p.ttr_quantum);
    }
    return false;
}

namespace {

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

double number_or_inf(const json& j, const char* key) {
    const json& v = j.at(key);
    if (v.is_null()) return std::numeric_limits<double>::infinity();
    return v.get<double>();
}

}  // namespace

json to_json(const ScenarioRow& row) {
    return json{
        {"name", row.name},
        {"distance", row.distance},
        {"extra_loss", row.extra_loss},
        {"capacity_classical", row.capacity_classical},
        {"capacity_quantum", row.capacity_quantum},
        {"ttr_classical", finite_or_null(row.ttr_classical)},
        {"ttr_quantum", finite_or_null(row.ttr_quantum)},
    };
}

ScenarioRow scenario_row_from_json(const json& j) {
    ScenarioRow row;
    row.name = j.at("name").get<std::string>();
    row.distance = j.at("distance").get<double>();
    row.extra_loss = j.at("extra_loss").get<double>();
    row.capacity_classical = j.at("capacity_classical").get<double>();
    row.capacity_quantum = j.at("capacity_quantum").get<double>();
    row.ttr_classical = number_or_inf(j, "ttr_classical");
    row.ttr_quantum = number_or_inf(j, "ttr_quantum");
    return row;
}

std::string csv_escape(std::string_view field) {
    if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string render_scenario_table(std::span<const ScenarioRow> rows, OutputFormat format) {
    switch (format) {
        case OutputFormat::json: {
            json arr = json::array();
            for (const ScenarioRow& r : rows) arr.push_back(to_json(r));
            return arr.dump(2) + "\n";
        }
        case OutputFormat::csv: {
            std::string out =
                "scenario,distance_m,extra_loss_db,capacity_ssr_bps,capacity_jdr_bps,ttr_ssr_s,"
                "ttr_jdr_s,deviates_from_published\n";
            for (const ScenarioRow& r : rows) {
                out += fmt::format("{},{},{},{},{},{},{},{}\n", csv_escape(r.name),
                                   format_double(r.distance), format_double(r.extra_loss),
                                   format_double(r.capacity_classical),
                                   format_double(r.capacity_quantum),
                                   format_double(r.ttr_classical), format_double(r.ttr_quantum),
                                   deviates_from_published(r) ? 1 : 0);
            }
            return out;
        }
        case OutputFormat::table: break;
    }

    const auto fixed2 = [](double v) {
        return std::isfinite(v) ? fmt::format("{:.2f}", v) : format_double(v);
    };
    // Capacities are truncated, not rounded.
    const auto trunc2 = [&](double v) {
        return std::isfinite(v) ? fixed2(std::trunc(v * 100.0) / 100.0) : format_double(v);
    };
    std::string out = fmt::format("{:<16} {:>9} {:>6}  {:<21} {:<19} {}\n", "Scenario",
                                  "Dist.", "Extra", "Capacity (C/Q)", "TTR (C/Q)", "Note");
    out += fmt::format("{:<16} {:>9} {:>6}  {:<21} {:<19}\n", "", "(km)", "(dB)", "(bit/s)",
                       "(s)");
    bool any_flag = false;
    for (const ScenarioRow& r : rows) {
        const bool flag = deviates_from_published(r);
        any_flag = any_flag || flag;
        out += fmt::format("{:<16} {:>9.0f} {:>6.0f}  {:<21} {:<19} {}\n", r.name,
                           r.distance / 1e3, r.extra_loss,
                           trunc2(r.capacity_classical) + " / " + trunc2(r.capacity_quantum),
                           fixed2(r.ttr_classical) + " / " + fixed2(r.ttr_quantum),
                           flag ? "*" : "");
    }
    if (any_flag) out += "* differs by more than 5% from the published value\n";
    return out;
}

std::string render_sweep_csv(std::span<const SweepPoint> points) {
    std::string out(kSweepCsvHeader);
    out += '\n';
    for (const SweepPoint& p : points) {
        out += fmt::format("{},{},{},{},{},{},{},{}\n", format_double(p.start_elevation),
                           format_double(p.start_time), format_double(p.ttr_classical),
                           format_double(p.ttr_quantum), format_double(p.ttr_effective_classical),
                           format_double(p.ttr_effective_quantum), format_double(p.atw_classical),
                           format_double(p.atw_quantum));
    }
    return out;
}

}  // namespace beacon::report
