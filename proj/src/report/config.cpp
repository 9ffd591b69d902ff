#include "beacon/report/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

namespace beacon::report {
namespace {

using nlohmann::json;

// 1-based line of the first `"key" :` occurrence in the raw document, 0 if
// it cannot be located.
std::size_t line_of_key(std::string_view text, std::string_view key) {
    const std::string quoted = fmt::format("\"{}\"", key);
    std::size_t pos = 0;
    while ((pos = text.find(quoted, pos)) != std::string_view::npos) {
        std::size_t after = pos + quoted.size();
        while (after < text.size() && std::isspace(static_cast<unsigned char>(text[after]))) {
            ++after;
        }
        if (after < text.size() && text[after] == ':') {
            return 1 + static_cast<std::size_t>(
                           std::count(text.begin(), text.begin() + static_cast<long>(pos), '\n'));
        }
        pos = after;
    }
    return 0;
}

class Reader {
public:
    Reader(std::string_view text, std::string_view source) : text_(text), source_(source) {}

    [[noreturn]] void fail(std::string_view key, std::string_view what) const {
        const std::size_t line = line_of_key(text_, key);
        if (line > 0) {
            throw ConfigError(fmt::format("{}:{}: key \"{}\": {}", source_, line, key, what));
        }
        throw ConfigError(fmt::format("{}: key \"{}\": {}", source_, key, what));
    }

    double number(const json& v, std::string_view key) const {
        if (!v.is_number()) fail(key, "expected a number");
        const double d = v.get<double>();
        if (!std::isfinite(d)) fail(key, "expected a finite number");
        return d;
    }

    std::string string(const json& v, std::string_view key) const {
        if (!v.is_string()) fail(key, "expected a string");
        return v.get<std::string>();
    }

    std::uint64_t count(const json& v, std::string_view key) const {
        const double d = number(v, key);
        if (d < 0.0 || d != std::floor(d) || d > 9.007199254740992e15) {
            fail(key, "expected a non-negative integer");
        }
        return static_cast<std::uint64_t>(d);
    }

    using Handler = std::function<void(const json&)>;

    void section(const json& obj, std::string_view name,
                 const std::map<std::string, Handler, std::less<>>& handlers) const {
        if (!obj.is_object()) fail(name, "expected an object");
        for (const auto& [key, value] : obj.items()) {
            const auto it = handlers.find(key);
            if (it == handlers.end()) {
                fail(key, name.empty() ? std::string("unknown key")
                                       : fmt::format("unknown key in \"{}\"", name));
            }
            it->second(value);
        }
    }

private:
    std::string_view text_;
    std::string_view source_;
};

}  // namespace

std::string_view to_string(OutputFormat f) {
    switch (f) {
        case OutputFormat::table: return "table";
        case OutputFormat::csv: return "csv";
        case OutputFormat::json: return "json";
    }
    return "?";
}

std::optional<OutputFormat> parse_output_format(std::string_view text) {
    if (text == "table") return OutputFormat::table;
    if (text == "csv") return OutputFormat::csv;
    if (text == "json") return OutputFormat::json;
    return std::nullopt;
}

void RunConfig::validate() const {
    link.validate();
    geometry.validate();
    spec.validate();
    if (sweep_points < 2) throw ConfigError("sweep_points must be >= 2");
    if (!std::isfinite(loss_offset_db)) throw ConfigError("loss_offset_db must be finite");
}

ReadingContext RunConfig::reading_context() const {
    return {link, geometry, spec, loss_offset_db};
}

RunConfig parse_config(std::string_view text, std::string_view source, RunConfig base) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ConfigError(fmt::format("{}: malformed JSON: {}", source, e.what()));
    }

    const Reader r(text, source);
    RunConfig cfg = std::move(base);
    LinkBudget& lb = cfg.link;
    PassGeometry& g = cfg.geometry;
    IdentificationSpec& spec = cfg.spec;

    auto num = [&r](double& field, std::string_view key) {
        return [&r, &field, key](const json& v) { field = r.number(v, key); };
    };
    auto nm = [&r](double& field, std::string_view key) {
        return [&r, &field, key](const json& v) { field = r.number(v, key) * 1e-9; };
    };

    const std::map<std::string, Reader::Handler, std::less<>> link_keys{
        {"wavelength", num(lb.wavelength, "wavelength")},
        {"wavelength_nm", nm(lb.wavelength, "wavelength_nm")},
        {"peak_power", num(lb.peak_power, "peak_power")},
        {"pulse_width", num(lb.pulse_width, "pulse_width")},
        {"pulse_interval", num(lb.pulse_interval, "pulse_interval")},
        {"fraction_ones", num(lb.fraction_ones, "fraction_ones")},
        {"emission_solid_angle", num(lb.emission_solid_angle, "emission_solid_angle")},
        {"telescope_diameter", num(lb.telescope_diameter, "telescope_diameter")},
        {"filter_transmission", num(lb.filter_transmission, "filter_transmission")},
        {"filter_bandwidth", num(lb.filter_bandwidth, "filter_bandwidth")},
        {"filter_bandwidth_nm", nm(lb.filter_bandwidth, "filter_bandwidth_nm")},
        {"solar_spectral_flux", num(lb.solar_spectral_flux, "solar_spectral_flux")},
        {"detector_quantum_efficiency",
         num(lb.detector_quantum_efficiency, "detector_quantum_efficiency")},
        {"albedo_area_cubesat", num(lb.albedo_area_cubesat, "albedo_area_cubesat")},
        {"albedo_area_1m", num(lb.albedo_area_1m, "albedo_area_1m")},
        {"base_noise_rate", num(lb.base_noise_rate, "base_noise_rate")},
        {"noise_reference_bandwidth",
         num(lb.noise_reference_bandwidth, "noise_reference_bandwidth")},
        {"noise_reference_bandwidth_nm",
         nm(lb.noise_reference_bandwidth, "noise_reference_bandwidth_nm")},
        {"distance", num(lb.distance, "distance")},
        {"extra_loss", num(lb.extra_loss, "extra_loss")},
        {"canonical_noise_rate",
         [&](const json& v) {
             if (v.is_null()) {
                 lb.canonical_noise_rate.reset();
             } else {
                 lb.canonical_noise_rate = r.number(v, "canonical_noise_rate");
             }
         }},
        {"signal_mode",
         [&](const json& v) {
             const auto mode = parse_signal_mode(r.string(v, "signal_mode"));
             if (!mode) r.fail("signal_mode", "expected \"calibrated\" or \"first_principles\"");
             lb.signal_mode = *mode;
         }},
        {"calibrated_signal_rate", num(lb.calibrated_signal_rate, "calibrated_signal_rate")},
        {"calibration_distance", num(lb.calibration_distance, "calibration_distance")},
        {"modulation_bandwidth", num(lb.modulation_bandwidth, "modulation_bandwidth")},
    };

    const std::map<std::string, Reader::Handler, std::less<>> geometry_keys{
        {"altitude", num(g.altitude, "altitude")},
        {"earth_radius", num(g.earth_radius, "earth_radius")},
        {"gravitational_parameter", num(g.gravitational_parameter, "gravitational_parameter")},
        {"min_elevation", num(g.min_elevation, "min_elevation")},
    };

    const std::map<std::string, Reader::Handler, std::less<>> spec_keys{
        {"constellation_size",
         [&](const json& v) { spec.constellation_size = r.count(v, "constellation_size"); }},
        {"receiver",
         [&](const json& v) {
             const auto rx = parse_receiver(r.string(v, "receiver"));
             if (!rx) r.fail("receiver", "expected \"ssr\" or \"jdr\"");
             spec.receiver = *rx;
         }},
        {"start_offset_factor", num(spec.start_offset_factor, "start_offset_factor")},
    };

    const std::map<std::string, Reader::Handler, std::less<>> top_keys{
        {"link_budget", [&](const json& v) { r.section(v, "link_budget", link_keys); }},
        {"geometry", [&](const json& v) { r.section(v, "geometry", geometry_keys); }},
        {"identification", [&](const json& v) { r.section(v, "identification", spec_keys); }},
        {"output_format",
         [&](const json& v) {
             const auto f = parse_output_format(r.string(v, "output_format"));
             if (!f) r.fail("output_format", "expected \"table\", \"csv\" or \"json\"");
             cfg.output_format = *f;
         }},
        {"loss_offset_db", num(cfg.loss_offset_db, "loss_offset_db")},
        {"sweep_points",
         [&](const json& v) {
             cfg.sweep_points = static_cast<std::size_t>(r.count(v, "sweep_points"));
         }},
    };

    r.section(doc, "", top_keys);

    try {
        cfg.validate();
    } catch (const std::exception& e) {
        throw ConfigError(fmt::format("{}: {}", source, e.what()));
    }
    return cfg;
}

RunConfig load_config(const std::optional<std::filesystem::path>& path) {
    if (!path) return RunConfig{};
    std::ifstream in(*path, std::ios::binary);
    if (!in) throw ConfigError(fmt::format("cannot open config file {}", path->string()));
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path->string());
}

}  // namespace beacon::report
