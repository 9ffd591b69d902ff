#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "beacon/identification.hpp"
#include "beacon/linkbudget.hpp"
#include "beacon/passgeom.hpp"

namespace beacon::report {

enum class OutputFormat { table, csv, json };

std::string_view to_string(OutputFormat f);
std::optional<OutputFormat> parse_output_format(std::string_view text);

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Defaults: beacon link budget with the narrowed filter, detected rates
// calibrated to 3 photons/s at 1000 km with 0.01 noise photons/s, B = 1 MHz,
// 1000 km altitude, one million satellites.
struct RunConfig {
    LinkBudget link;
    PassGeometry geometry;
    IdentificationSpec spec;
    OutputFormat output_format = OutputFormat::table;
    double loss_offset_db = 0.0;
    std::size_t sweep_points = 200;

    void validate() const;
    ReadingContext reading_context() const;
};

// Applies the JSON document in `text` on top of `base`. Unknown keys and
// malformed input raise ConfigError naming the source, line and key.
RunConfig parse_config(std::string_view text, std::string_view source = "<config>",
                       RunConfig base = {});

RunConfig load_config(const std::optional<std::filesystem::path>& path);

}  // namespace beacon::report
