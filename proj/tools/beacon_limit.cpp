// beacon-limit: capacity, time-to-read and availability analysis for weak
// optical satellite beacons.

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "beacon/report/commands.hpp"
#include "beacon/report/config.hpp"

namespace br = beacon::report;

int main(int argc, char** argv) {
    CLI::App app{"Classical and quantum limits of reading a LEO satellite beacon",
                 "beacon-limit"};
    app.require_subcommand(1);
    app.fallthrough();

    std::optional<std::string> config_path;
    std::optional<std::string> format;
    std::optional<double> loss_offset;
    std::optional<double> altitude_km;
    std::optional<std::uint64_t> satellites;

    app.add_option("--config", config_path, "JSON configuration file")->check(CLI::ExistingFile);
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    app.add_option("--loss-offset-db", loss_offset,
                   "Additional loss applied to weather scenarios (dB)");
    app.add_option("--altitude-km", altitude_km, "Orbital altitude (km)")
        ->check(CLI::PositiveNumber);
    app.add_option("--satellites", satellites, "Constellation size")->check(CLI::Range(2.0, 9e15));

    br::CapacityArgs cap_args;
    std::optional<std::string> cap_kind;
    CLI::App* cap = app.add_subcommand("capacity", "Capacities in bits/use and bits/s");
    cap->add_option("--signal-rate", cap_args.signal_rate, "Signal photons/s before the channel")
        ->check(CLI::NonNegativeNumber);
    cap->add_option("--noise-rate", cap_args.noise_rate, "Noise photons/s at the detector")
        ->check(CLI::NonNegativeNumber);
    cap->add_option("--bandwidth", cap_args.bandwidth, "Modulation bandwidth (symbols/s)")
        ->check(CLI::PositiveNumber);
    cap->add_option("--transmittance", cap_args.transmittance, "Channel transmittance")
        ->check(CLI::Range(0.0, 1.0));
    cap->add_option("--kind", cap_kind, "Only this capacity")
        ->check(CLI::IsMember({"holevo", "homodyne", "heterodyne"}));

    CLI::App* table2 = app.add_subcommand("table2", "Scenario comparison table");

    br::SweepArgs sweep_args;
    std::string sweep_kind = "ttr";
    std::optional<std::size_t> sweep_points;
    std::optional<std::string> sweep_out;
    std::optional<std::string> sweep_svg;
    CLI::App* sweep = app.add_subcommand("sweep", "TTR/ATW versus start elevation");
    sweep->add_option("--kind", sweep_kind, "Quantity to chart")
        ->check(CLI::IsMember({"ttr", "atw"}));
    sweep->add_option("--extra-db", sweep_args.extra_loss, "Weather loss (dB)")
        ->check(CLI::NonNegativeNumber);
    sweep->add_option("--points", sweep_points, "Grid size")->check(CLI::Range(2, 1000000));
    sweep->add_option("--out", sweep_out, "CSV output path (stdout when omitted)");
    sweep->add_option("--svg", sweep_svg, "SVG chart output path");

    CLI::App* pass = app.add_subcommand("pass", "Pass geometry report");
    CLI::App* arrival = app.add_subcommand("arrival", "Constellation arrival rate");
    CLI::App* link = app.add_subcommand("link", "Link budget report");

    double design_elevation = 0.0;
    double design_loss = 0.0;
    CLI::App* design = app.add_subcommand("design", "Compound-code design point");
    design->add_option("--elevation", design_elevation, "Design elevation (rad)")->required();
    design->add_option("--extra-db", design_loss, "Weather loss (dB)")
        ->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        br::RunConfig cfg = br::load_config(config_path);
        if (format) cfg.output_format = *br::parse_output_format(*format);
        if (loss_offset) cfg.loss_offset_db = *loss_offset;
        if (altitude_km) cfg.geometry.altitude = *altitude_km * 1e3;
        if (satellites) cfg.spec.constellation_size = *satellites;
        if (sweep_points) cfg.sweep_points = *sweep_points;
        cfg.validate();

        if (*cap) {
            if (cap_kind) cap_args.kind = beacon::parse_capacity_kind(*cap_kind);
            br::cmd_capacity(cfg, cap_args, std::cout);
        } else if (*table2) {
            br::cmd_table2(cfg, std::cout);
        } else if (*sweep) {
            sweep_args.kind = sweep_kind == "atw" ? br::SweepKind::atw : br::SweepKind::ttr;
            if (sweep_out) sweep_args.csv_path = *sweep_out;
            if (sweep_svg) sweep_args.svg_path = *sweep_svg;
            br::cmd_sweep(cfg, sweep_args, std::cout);
        } else if (*pass) {
            br::cmd_pass(cfg, std::cout);
        } else if (*arrival) {
            br::cmd_arrival(cfg, std::cout);
        } else if (*link) {
            br::cmd_link(cfg, std::cout);
        } else if (*design) {
            br::cmd_design(cfg, design_elevation, design_loss, std::cout);
        }
    } catch (const br::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 2;
    } catch (const br::IoError& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
