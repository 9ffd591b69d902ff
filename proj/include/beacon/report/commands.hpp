#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "beacon/capacity.hpp"
#include "beacon/report/config.hpp"

namespace beacon::report {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Unset rates fall back to the detected rates of the configured link.
struct CapacityArgs {
    std::optional<double> signal_rate;
    std::optional<double> noise_rate;
    std::optional<double> bandwidth;
    double transmittance = 1.0;
    std::optional<CapacityKind> kind;  // all kinds when unset
};

enum class SweepKind { ttr, atw };

struct SweepArgs {
    SweepKind kind = SweepKind::ttr;
    double extra_loss = 0.0;
    std::optional<std::filesystem::path> csv_path;  // stdout when unset
    std::optional<std::filesystem::path> svg_path;
};

void cmd_capacity(const RunConfig& cfg, const CapacityArgs& args, std::ostream& out);
void cmd_table2(const RunConfig& cfg, std::ostream& out);
void cmd_sweep(const RunConfig& cfg, const SweepArgs& args, std::ostream& out);
void cmd_pass(const RunConfig& cfg, std::ostream& out);
void cmd_arrival(const RunConfig& cfg, std::ostream& out);
void cmd_link(const RunConfig& cfg, std::ostream& out);
void cmd_design(const RunConfig& cfg, double design_elevation, double extra_loss,
                std::ostream& out);

}  // namespace beacon::report
