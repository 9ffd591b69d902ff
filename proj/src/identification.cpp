#include "beacon/identification.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace beacon {

std::string_view to_string(Receiver r) { return r == Receiver::ssr ? "ssr" : "jdr"; }

std::optional<Receiver> parse_receiver(std::string_view text) {
    if (text == "ssr") return Receiver::ssr;
    if (text == "jdr") return Receiver::jdr;
    return std::nullopt;
}

CapacityKind capacity_kind(Receiver r) {
    return r == Receiver::ssr ? CapacityKind::homodyne : CapacityKind::holevo;
}

void IdentificationSpec::validate() const {
    if (constellation_size < 2) throw std::domain_error("constellation_size must be >= 2");
    if (!std::isfinite(start_offset_factor) || start_offset_factor < 1.0) {
        throw std::domain_error("start_offset_factor must be finite and >= 1");
    }
}

unsigned IdentificationSpec::id_bits() const { return bits_needed(constellation_size); }

unsigned bits_needed(std::uint64_t constellation_size) {
    if (constellation_size < 2) throw std::domain_error("constellation_size must be >= 2");
    return static_cast<unsigned>(std::bit_width(constellation_size - 1));
}

double ttr(double capacity, unsigned id_bits) {
    if (id_bits == 0) throw std::domain_error("id_bits must be > 0");
    if (!(capacity >= 0.0)) throw std::domain_error("capacity must be >= 0");
    if (capacity == 0.0) return std::numeric_limits<double>::infinity();
    return static_cast<double>(id_bits) / capacity;
}

double atw(double pass_time, double start_time, double ttr, double offset_factor) {
    if (!(pass_time > 0.0)) throw std::domain_error("pass time must be > 0");
    if (!(start_time >= 0.0)) throw std::domain_error("start time must be >= 0");
    return std::max(0.0, pass_time - start_time - offset_factor * ttr);
}

double effective_extra_loss(double extra_loss, double loss_offset_db) {
    return extra_loss > 0.0 ? extra_loss + loss_offset_db : extra_loss;
}

double capacity_at(const ReadingContext& ctx, double distance, double extra_loss,
                   Receiver receiver) {
    const LinkBudget lb =
        with_path(ctx.link, distance, effective_extra_loss(extra_loss, ctx.loss_offset_db));
    return capacity_per_second(detected_rate_params(lb), capacity_kind(receiver));
}

std::string_view to_string(DesignCase c) {
    switch (c) {
        case DesignCase::zenith_only: return "zenith_only";
        case DesignCase::too_slow: return "too_slow";
        case DesignCase::feasible: return "feasible";
    }
    return "?";
}

DesignResult classify_design(const ReadingContext& ctx, double design_elevation,
                             double extra_loss, Receiver receiver) {
    const PassGeometry& g = ctx.geometry;
    g.validate();
    ctx.spec.validate();
    if (!(design_elevation >= g.min_elevation && design_elevation <= std::numbers::pi / 2)) {
        throw std::domain_error("design elevation outside [min_elevation, pi/2]");
    }
    const double factor = ctx.spec.start_offset_factor;
    const double total = pass_duration(g);

    DesignResult out;
    out.capacity = capacity_at(ctx, slant_range(g, design_elevation), extra_loss, receiver);
    out.ttr = ttr(out.capacity, ctx.spec.id_bits());
    out.start_time = time_from_rise(g, design_elevation);

    if (design_elevation == std::numbers::pi / 2) {
        out.design_case = DesignCase::zenith_only;
        out.atw = atw(total, out.start_time, out.ttr, factor);
    } else if (factor * out.ttr + out.start_time >= total) {
        out.design_case = DesignCase::too_slow;
        out.atw = 0.0;
    } else {
        out.design_case = DesignCase::feasible;
        out.atw = total - out.start_time - factor * out.ttr;
    }
    return out;
}

std::vector<Scenario> standard_scenarios() {
    return {
        {"Zenith", 1000e3, 0.0},
        {"Early", 2000e3, 0.0},
        {"Horizon", 2842e3, 0.0},
        {"Atmosphere", 1000e3, 10.0},
        {"Adverse weather", 1000e3, 22.0},
    };
}

ScenarioRow evaluate_scenario(const ReadingContext& ctx, const Scenario& s) {
    const unsigned bits = ctx.spec.id_bits();
    ScenarioRow row;
    row.name = s.name;
    row.distance = s.distance;
    row.extra_loss = s.extra_loss;
    row.capacity_classical = capacity_at(ctx, s.distance, s.extra_loss, Receiver::ssr);
    row.capacity_quantum = capacity_at(ctx, s.distance, s.extra_loss, Receiver::jdr);
    row.ttr_classical = ttr(row.capacity_classical, bits);
    row.ttr_quantum = ttr(row.capacity_quantum, bits);
    return row;
}

std::vector<ScenarioRow> scenario_table(const ReadingContext& ctx) {
    ctx.spec.validate();
    std::vector<ScenarioRow> rows;
    for (const Scenario& s : standard_scenarios()) rows.push_back(evaluate_scenario(ctx, s));
    return rows;
}

std::vector<double> uniform_elevation_grid(std::size_t n, double lo, double hi) {
    if (n < 2) throw std::domain_error("elevation grid needs at least 2 points");
    if (!(lo <= hi)) throw std::domain_error("elevation grid bounds out of order");
    std::vector<double> grid(n);
    for (std::size_t i = 0; i < n; ++i) {
        grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    grid.back() = hi;
    return grid;
}

std::vector<SweepPoint> elevation_sweep(const ReadingContext& ctx, double extra_loss,
                                        std::span<const double> elevations) {
    if (elevations.empty()) throw std::domain_error("elevation grid is empty");
    ctx.spec.validate();
    const PassGeometry& g = ctx.geometry;
    const double total = pass_duration(g);
    const double factor = ctx.spec.start_offset_factor;
    const unsigned bits = ctx.spec.id_bits();

    std::vector<SweepPoint> points;
    points.reserve(elevations.size());
    for (double theta : elevations) {
        SweepPoint p;
        p.start_elevation = theta;
        p.start_time = time_from_rise(g, theta);
        const double range = slant_range(g, theta);
        p.ttr_classical = ttr(capacity_at(ctx, range, extra_loss, Receiver::ssr), bits);
        p.ttr_quantum = ttr(capacity_at(ctx, range, extra_loss, Receiver::jdr), bits);
        p.ttr_effective_classical = factor * p.ttr_classical;
        p.ttr_effective_quantum = factor * p.ttr_quantum;
        p.atw_classical = atw(total, p.start_time, p.ttr_classical, factor);
        p.atw_quantum = atw(total, p.start_time, p.ttr_quantum, factor);
        points.push_back(p);
    }
    return points;
}

double arrival_rate(const PassGeometry& g, std::uint64_t constellation_size) {
    if (constellation_size < 1) throw std::domain_error("constellation_size must be >= 1");
    return static_cast<double>(constellation_size) / orbital_period(g);
}

}  // namespace beacon
