#pragma once

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "beacon/capacity.hpp"
#include "beacon/linkbudget.hpp"
#include "beacon/passgeom.hpp"

namespace beacon {

// SSR: symbol-by-symbol receiver at the homodyne Shannon limit.
// JDR: joint-detection receiver at the Holevo limit.
enum class Receiver { ssr, jdr };

std::string_view to_string(Receiver r);
std::optional<Receiver> parse_receiver(std::string_view text);
CapacityKind capacity_kind(Receiver r);

struct IdentificationSpec {
    std::uint64_t constellation_size = 1'000'000;
    Receiver receiver = Receiver::jdr;
    // Reading starts on average halfway into the repeating ID sequence.
    double start_offset_factor = 1.5;

    void validate() const;
    unsigned id_bits() const;
};

/// ceil(log2(S)), exact at powers of two.
unsigned bits_needed(std::uint64_t constellation_size);

/// Time to read `id_bits` at `capacity` bits/s. Zero capacity yields +inf
/// (beacon unreadable), not an error.
double ttr(double capacity, unsigned id_bits);

/// Availability time window max(0, T_s - t - factor * ttr).
double atw(double pass_time, double start_time, double ttr, double offset_factor);

// Everything a reading analysis needs. loss_offset_db is an additional loss
// applied only to weather scenarios (those with nonzero extra loss).
struct ReadingContext {
    LinkBudget link;
    PassGeometry geometry;
    IdentificationSpec spec;
    double loss_offset_db = 0.0;
};

double effective_extra_loss(double extra_loss, double loss_offset_db);

/// Capacity in bits/s for `receiver` at the given path. `extra_loss` is the
/// nominal scenario loss; the context's loss offset is added when it is > 0.
double capacity_at(const ReadingContext& ctx, double distance, double extra_loss,
                   Receiver receiver);

enum class DesignCase {
    zenith_only,  // rate chosen for the zenith link: readable only near the top
    too_slow,     // reading cannot finish before the satellite sets
    feasible,
};

std::string_view to_string(DesignCase c);

struct DesignResult {
    DesignCase design_case = DesignCase::feasible;
    double capacity = 0.0;  // bits/s at the design elevation
    double ttr = 0.0;
    double start_time = 0.0;
    double atw = 0.0;
};

/// Compound-code design: the code rate is fixed by the worst link the beacon
/// must still be read on, i.e. the slant range at `design_elevation`.
DesignResult classify_design(const ReadingContext& ctx, double design_elevation,
                             double extra_loss, Receiver receiver);

struct Scenario {
    std::string name;
    double distance = 0.0;    // m
    double extra_loss = 0.0;  // dB, nominal
};

// Zenith, Early, Horizon, Atmosphere, Adverse weather.
std::vector<Scenario> standard_scenarios();

struct ScenarioRow {
    std::string name;
    double distance = 0.0;
    double extra_loss = 0.0;
    double capacity_classical = 0.0;
    double capacity_quantum = 0.0;
    double ttr_classical = 0.0;
    double ttr_quantum = 0.0;
};

ScenarioRow evaluate_scenario(const ReadingContext& ctx, const Scenario& s);
std::vector<ScenarioRow> scenario_table(const ReadingContext& ctx);

struct SweepPoint {
    double start_elevation = 0.0;
    double start_time = 0.0;
    double ttr_classical = 0.0;
    double ttr_quantum = 0.0;
    double ttr_effective_classical = 0.0;
    double ttr_effective_quantum = 0.0;
    double atw_classical = 0.0;
    double atw_quantum = 0.0;
};

/// n points uniform in radians over [lo, hi].
std::vector<double> uniform_elevation_grid(std::size_t n, double lo = 0.01,
                                           double hi = std::numbers::pi / 2);

/// TTR and ATW for both receivers as a function of the elevation at which
/// reading starts. The capacity at each start elevation is the one at that
/// elevation's slant range (the worst link on the rest of the ascending half).
std::vector<SweepPoint> elevation_sweep(const ReadingContext& ctx, double extra_loss,
                                        std::span<const double> elevations);

/// Satellites entering view per second, one crossing per orbit each.
double arrival_rate(const PassGeometry& g, std::uint64_t constellation_size);

}  // namespace beacon
