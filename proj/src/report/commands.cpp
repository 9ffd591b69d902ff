#include "beacon/report/commands.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <numbers>
#include <string>
#include <variant>
#include <vector>

#include <fmt/format.h>
#include <json.hpp>

#include "beacon/identification.hpp"
#include "beacon/linkbudget.hpp"
#include "beacon/passgeom.hpp"
#include "beacon/report/render.hpp"
#include "beacon/report/svg.hpp"

namespace beacon::report {
namespace {

using nlohmann::json;

struct Field {
    std::string key;
    std::variant<double, std::string> value;
    std::string unit;
};

json field_json(const Field& f) {
    if (const double* d = std::get_if<double>(&f.value)) {
        return std::isfinite(*d) ? json(*d) : json(nullptr);
    }
    return json(std::get<std::string>(f.value));
}

std::string field_text(const Field& f, bool full_precision) {
    if (const double* d = std::get_if<double>(&f.value)) {
        return full_precision ? format_double(*d) : fmt::format("{:.6g}", *d);
    }
    return std::get<std::string>(f.value);
}

// Scalar report. JSON is a flat object unless `extra` supplies more members.
void emit(std::ostream& out, OutputFormat format, const std::vector<Field>& fields,
          const json& extra = json::object()) {
    switch (format) {
        case OutputFormat::json: {
            json obj = json::object();
            for (const Field& f : fields) obj[f.key] = field_json(f);
            for (const auto& [k, v] : extra.items()) obj[k] = v;
            out << obj.dump(2) << '\n';
            return;
        }
        case OutputFormat::csv:
            out << "key,value,unit\n";
            for (const Field& f : fields) {
                out << csv_escape(f.key) << ',' << csv_escape(field_text(f, true)) << ','
                    << csv_escape(f.unit) << '\n';
            }
            return;
        case OutputFormat::table:
            for (const Field& f : fields) {
                out << fmt::format("{:<34} {}", f.key, field_text(f, false));
                if (!f.unit.empty()) out << ' ' << f.unit;
                out << '\n';
            }
            return;
    }
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError(fmt::format("cannot open {} for writing", path.string()));
    f << content;
    f.flush();
    if (!f) throw IoError(fmt::format("failed writing {}", path.string()));
}

constexpr double kDeg = std::numbers::pi / 180.0;

}  // namespace

void cmd_capacity(const RunConfig& cfg, const CapacityArgs& args, std::ostream& out) {
    RateParams r = detected_rate_params(cfg.link);
    r.transmittance = args.transmittance;
    if (args.signal_rate) r.signal_photon_rate = *args.signal_rate;
    if (args.noise_rate) r.noise_photon_rate = *args.noise_rate;
    if (args.bandwidth) r.modulation_bandwidth = *args.bandwidth;
    r.validate();

    std::vector<Field> fields{
        {"transmittance", r.transmittance, ""},
        {"signal_photon_rate", r.signal_photon_rate, "photons/s"},
        {"noise_photon_rate", r.noise_photon_rate, "photons/s"},
        {"modulation_bandwidth", r.modulation_bandwidth, "symbols/s"},
    };
    constexpr std::array kinds{CapacityKind::holevo, CapacityKind::homodyne,
                               CapacityKind::heterodyne};
    for (CapacityKind k : kinds) {
        if (args.kind && *args.kind != k) continue;
        const CapacityValue v = capacity_value(r, k);
        fields.push_back({fmt::format("{}_bits_per_use", to_string(k)), v.bits_per_use, "bit"});
        fields.push_back(
            {fmt::format("{}_bits_per_second", to_string(k)), *v.bits_per_second, "bit/s"});
    }
    const SnrReport snr = homodyne_snr(r);
    fields.push_back({"snr_published_2gE_over_4N_plus_B", snr.published, ""});
    fields.push_back({"snr_consistent_4gE_over_2N_plus_B", snr.per_use_consistent, ""});
    emit(out, cfg.output_format, fields);
}

void cmd_table2(const RunConfig& cfg, std::ostream& out) {
    const std::vector<ScenarioRow> rows = scenario_table(cfg.reading_context());
    out << render_scenario_table(rows, cfg.output_format);
    if (cfg.output_format == OutputFormat::table) {
        out << fmt::format(
            "id bits {}, B = {} symbols/s, noise {} photons/s, weather loss offset {} dB\n",
            cfg.spec.id_bits(), format_double(cfg.link.modulation_bandwidth),
            format_double(detected_noise_rate(cfg.link)), format_double(cfg.loss_offset_db));
    }
}

void cmd_sweep(const RunConfig& cfg, const SweepArgs& args, std::ostream& out) {
    const ReadingContext ctx = cfg.reading_context();
    const std::vector<double> grid =
        uniform_elevation_grid(cfg.sweep_points, std::max(0.01, cfg.geometry.min_elevation));
    const std::vector<SweepPoint> points = elevation_sweep(ctx, args.extra_loss, grid);
    const std::string csv = render_sweep_csv(points);

    if (args.csv_path) {
        write_file(*args.csv_path, csv);
    } else {
        out << csv;
    }

    if (args.svg_path) {
        const double total = pass_duration(cfg.geometry);
        ChartSpec chart;
        ChartSeries jdr{"JDR (Holevo)", {}, {}, false};
        ChartSeries ssr{"SSR (homodyne)", {}, {}, true};
        for (const SweepPoint& p : points) {
            jdr.x.push_back(p.start_elevation);
            ssr.x.push_back(p.start_elevation);
            if (args.kind == SweepKind::ttr) {
                jdr.y.push_back(p.ttr_effective_quantum);
                ssr.y.push_back(p.ttr_effective_classical);
            } else {
                jdr.y.push_back(p.atw_quantum);
                ssr.y.push_back(p.atw_classical);
            }
        }
        const double loss = effective_extra_loss(args.extra_loss, cfg.loss_offset_db);
        if (args.kind == SweepKind::ttr) {
            chart.title = fmt::format("Time to read vs. start elevation ({} dB extra loss)",
                                      format_double(loss));
            chart.y_label = "1.5 x TTR (s)";
            chart.y_clip = total;
        } else {
            chart.title = fmt::format("Availability window vs. start elevation ({} dB extra loss)",
                                      format_double(loss));
            chart.y_label = "ATW (s)";
        }
        chart.x_label = "elevation at start of reading (rad)";
        chart.series = {std::move(jdr), std::move(ssr)};
        write_file(*args.svg_path, render_svg(chart));
    }
}

void cmd_pass(const RunConfig& cfg, std::ostream& out) {
    const PassGeometry& g = cfg.geometry;
    std::vector<Field> fields{
        {"altitude", g.altitude, "m"},
        {"orbital_period", orbital_period(g), "s"},
        {"pass_duration", pass_duration(g), "s"},
    };

    json table = json::array();
    std::vector<std::array<double, 3>> rows;
    for (int deg = 0; deg <= 90; deg += 10) {
        const double theta = deg == 90 ? std::numbers::pi / 2 : deg * kDeg;
        const double t = theta >= g.min_elevation ? time_from_rise(g, theta) : NAN;
        rows.push_back({static_cast<double>(deg), slant_range(g, theta), t});
        table.push_back({{"elevation_deg", deg},
                         {"slant_range", slant_range(g, theta)},
                         {"time_from_rise", std::isfinite(t) ? json(t) : json(nullptr)}});
    }

    switch (cfg.output_format) {
        case OutputFormat::json:
            emit(out, cfg.output_format, fields, json{{"slant_ranges", table}});
            return;
        case OutputFormat::csv:
            out << "elevation_deg,slant_range_m,time_from_rise_s\n";
            for (const auto& r : rows) {
                out << fmt::format("{},{},{}\n", format_double(r[0]), format_double(r[1]),
                                   format_double(r[2]));
            }
            return;
        case OutputFormat::table:
            emit(out, cfg.output_format, fields);
            out << fmt::format("\n{:>9} {:>16} {:>16}\n", "elev(deg)", "slant range (km)",
                               "t from rise (s)");
            for (const auto& r : rows) {
                out << fmt::format("{:>9.0f} {:>16.1f} {:>16.1f}\n", r[0], r[1] / 1e3, r[2]);
            }
            out << "\nNon-rotating Earth, overhead pass. Published figures: 1054 s (text), "
                   "1045 s (figure captions).\n";
            return;
    }
}

void cmd_arrival(const RunConfig& cfg, std::ostream& out) {
    const double rate = arrival_rate(cfg.geometry, cfg.spec.constellation_size);
    const double total = pass_duration(cfg.geometry);
    emit(out, cfg.output_format,
         {
             {"constellation_size", static_cast<double>(cfg.spec.constellation_size), ""},
             {"id_bits", static_cast<double>(cfg.spec.id_bits()), "bit"},
             {"orbital_period", orbital_period(cfg.geometry), "s"},
             {"arrival_rate", rate, "satellites/s"},
             {"pass_duration", total, "s"},
         });
}

void cmd_link(const RunConfig& cfg, std::ostream& out) {
    const LinkBudget& lb = cfg.link;
    LinkBudget linear = lb;
    linear.canonical_noise_rate.reset();
    emit(out, cfg.output_format,
         {
             {"distance", lb.distance, "m"},
             {"extra_loss", lb.extra_loss, "dB"},
             {"aperture_area", aperture_area(lb.telescope_diameter), "m^2"},
             {"transmittance", transmittance(lb), ""},
             {"transmittance_quoted", kQuotedTransmittance, ""},
             {"emitted_photon_rate", emitted_photon_rate(lb), "photons/s"},
             {"signal_mode", std::string(to_string(lb.signal_mode)), ""},
             {"detected_signal_rate_calibrated",
              detected_signal_rate(lb, SignalMode::calibrated), "photons/s"},
             {"detected_signal_rate_first_principles",
              detected_signal_rate(lb, SignalMode::first_principles), "photons/s"},
             {"detected_noise_rate", detected_noise_rate(lb), "photons/s"},
             {"detected_noise_rate_linear_model", detected_noise_rate(linear), "photons/s"},
         });
}

void cmd_design(const RunConfig& cfg, double design_elevation, double extra_loss,
                std::ostream& out) {
    const ReadingContext ctx = cfg.reading_context();
    std::vector<Field> fields{
        {"design_elevation", design_elevation, "rad"},
        {"slant_range", slant_range(cfg.geometry, design_elevation), "m"},
        {"extra_loss", effective_extra_loss(extra_loss, cfg.loss_offset_db), "dB"},
        {"pass_duration", pass_duration(cfg.geometry), "s"},
    };
    for (Receiver rx : {Receiver::ssr, Receiver::jdr}) {
        const DesignResult d = classify_design(ctx, design_elevation, extra_loss, rx);
        const std::string p(to_string(rx));
        fields.push_back({p + "_case", std::string(to_string(d.design_case)), ""});
        fields.push_back({p + "_capacity", d.capacity, "bit/s"});
        fields.push_back({p + "_ttr", d.ttr, "s"});
        fields.push_back({p + "_atw", d.atw, "s"});
    }
    emit(out, cfg.output_format, fields);
}

}  // namespace beacon::report
