#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "beacon/identification.hpp"
#include "oracles/reference_values.hpp"
#include "test_util.hpp"

using namespace beacon;
using beacon_test::rel_err;

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Independent sweep oracle: slant range from the quadratic root, capacities
// from the two-term formulas in extended precision.
struct OraclePoint {
    long double ttr_ssr;
    long double ttr_jdr;
    long double atw_ssr;
    long double atw_jdr;
};

OraclePoint sweep_oracle(double theta, double loss_db) {
    const long double re = 6371e3L;
    const long double rs = re + 1000e3L;
    const long double mu = 3.986004418e14L;
    const long double s = std::sin(static_cast<long double>(theta));
    const long double c = std::cos(static_cast<long double>(theta));
    const long double range = -re * s + std::sqrt(re * re * s * s + rs * rs - re * re);
    const long double period = 2 * std::numbers::pi_v<long double> * std::sqrt(rs * rs * rs / mu);
    const auto alpha = [&](long double el) {
        return std::acos(re * std::cos(el) / rs) - el;
    };
    (void)c;
    const long double total = period * alpha(0) / std::numbers::pi_v<long double>;
    const long double start = (alpha(0) - alpha(theta)) * period / (2 * std::numbers::pi_v<long double>);

    const long double b = 1e6L;
    const long double sig = 3.0L * (1e6L / range) * (1e6L / range) *
                            std::pow(10.0L, -static_cast<long double>(loss_db) / 10) / b;
    const long double n = 0.01L / b;
    const auto g = [](long double x) {
        return x == 0 ? 0.0L : (x + 1) * std::log2(x + 1) - x * std::log2(x);
    };
    const long double c_ssr = b * 0.5L * std::log2(1 + 4 * sig / (2 * n + 1));
    const long double c_jdr = b * (g(sig + n) - g(n));
    OraclePoint p;
    p.ttr_ssr = 20 / c_ssr;
    p.ttr_jdr = 20 / c_jdr;
    p.atw_ssr = std::max(0.0L, total - start - 1.5L * p.ttr_ssr);
    p.atw_jdr = std::max(0.0L, total - start - 1.5L * p.ttr_jdr);
    return p;
}

ReadingContext default_context() { return {}; }

}  // namespace

TEST_CASE("bits needed") {
    CHECK(bits_needed(1'000'000) == 20);
    CHECK(bits_needed(2) == 1);
    CHECK(bits_needed(3) == 2);
    CHECK(bits_needed(4) == 2);
    CHECK(bits_needed(1u << 20) == 20);
    CHECK(bits_needed((1u << 20) + 1) == 21);
    CHECK(bits_needed(std::uint64_t{1} << 63) == 63);
    CHECK(bits_needed((std::uint64_t{1} << 63) + 1) == 64);
    CHECK_THROWS_AS(bits_needed(1), std::domain_error);
    CHECK_THROWS_AS(bits_needed(0), std::domain_error);
    CHECK(IdentificationSpec{}.id_bits() == 20);
}

TEST_CASE("time to read") {
    CHECK(ttr(59.27, 20) == doctest::Approx(0.337).epsilon(1e-3));
    CHECK(ttr(8.65, 20) == doctest::Approx(2.312).epsilon(1e-3));
    CHECK(ttr(0.0, 20) == kInf);
    CHECK_THROWS_AS(ttr(1.0, 0), std::domain_error);
    CHECK_THROWS_AS(ttr(-1.0, 20), std::domain_error);
}

TEST_CASE("availability window") {
    CHECK(atw(1054.0, 0.0, 0.337, 1.5) == doctest::Approx(1053.4945));
    CHECK(atw(1054.0, 527.0, 400.0, 1.5) == 0.0);
    CHECK(atw(1054.0, 0.0, kInf, 1.5) == 0.0);
    CHECK_THROWS_AS(atw(0.0, 0.0, 1.0, 1.5), std::domain_error);
    CHECK_THROWS_AS(atw(100.0, -1.0, 1.0, 1.5), std::domain_error);
}

TEST_CASE("weather loss offset applies only to weather scenarios") {
    CHECK(effective_extra_loss(0.0, 6.0) == 0.0);
    CHECK(effective_extra_loss(10.0, 6.0) == 16.0);
    CHECK(effective_extra_loss(22.0, 0.0) == 22.0);
}

TEST_CASE("scenario table at the calibrated link") {
    const auto rows = scenario_table(default_context());
    REQUIRE(rows.size() == 5);
    const double want[5][2] = {
        {beacon_ref::kTableZenithClassical, beacon_ref::kTableZenithQuantum},
        {beacon_ref::kTableEarlyClassical, beacon_ref::kTableEarlyQuantum},
        {beacon_ref::kTableHorizonClassical, beacon_ref::kTableHorizonQuantum},
        {beacon_ref::kTableAtmosphereClassical, beacon_ref::kTableAtmosphereQuantum},
        {beacon_ref::kTableAdverseClassical, beacon_ref::kTableAdverseQuantum},
    };
    const char* names[5] = {"Zenith", "Early", "Horizon", "Atmosphere", "Adverse weather"};
    for (int i = 0; i < 5; ++i) {
        INFO(names[i]);
        CHECK(rows[i].name == names[i]);
        CHECK(rel_err(rows[i].capacity_classical, want[i][0]) < 1e-12);
        CHECK(rel_err(rows[i].capacity_quantum, want[i][1]) < 1e-11);
        CHECK(rel_err(rows[i].ttr_classical * rows[i].capacity_classical, 20.0) < 1e-12);
        CHECK(rel_err(rows[i].ttr_quantum * rows[i].capacity_quantum, 20.0) < 1e-12);
    }
    CHECK(rows[0].capacity_classical == doctest::Approx(8.65).epsilon(0.005));
    CHECK(rows[0].capacity_quantum == doctest::Approx(59.27).epsilon(0.005));
    CHECK(rows[0].ttr_classical == doctest::Approx(2.31).epsilon(0.01));
    CHECK(rows[0].ttr_quantum == doctest::Approx(0.34).epsilon(0.01));
    CHECK(rows[1].capacity_quantum == doctest::Approx(16.33).epsilon(0.01));
    // As stated, the 22 dB row sits well above the published 0.01 bit/s.
    CHECK(rows[4].capacity_classical > 0.05);
}

TEST_CASE("scenario table with the weather loss offset") {
    ReadingContext ctx = default_context();
    ctx.loss_offset_db = 5.97;
    const auto rows = scenario_table(ctx);
    CHECK(rows[0].capacity_quantum == doctest::Approx(59.27).epsilon(0.005));
    CHECK(std::round(rows[4].capacity_classical * 100) / 100 == doctest::Approx(0.01));
    CHECK(std::round(rows[4].capacity_quantum * 100) / 100 == doctest::Approx(0.13));

    // 28 dB total: the quantum entry lands within 5% of 20/166.07.
    ReadingContext plain = default_context();
    const double q28 = capacity_at(plain, 1000e3, 28.0, Receiver::jdr);
    CHECK(rel_err(q28, 20.0 / 166.07) < 0.05);
}

TEST_CASE("design classification") {
    const ReadingContext ctx = default_context();
    const double total = pass_duration(ctx.geometry);

    const DesignResult zenith = classify_design(ctx, kHalfPi, 0.0, Receiver::jdr);
    CHECK(zenith.design_case == DesignCase::zenith_only);
    CHECK(zenith.atw <= total / 2);
    CHECK(zenith.atw > 0.0);

    ReadingContext rainy = ctx;
    rainy.loss_offset_db = 5.97;
    const DesignResult slow = classify_design(rainy, 0.0, 22.0, Receiver::ssr);
    CHECK(slow.design_case == DesignCase::too_slow);
    CHECK(slow.ttr > total);
    CHECK(slow.atw == 0.0);
    CHECK(classify_design(ctx, 0.0, 22.0, Receiver::ssr).design_case == DesignCase::too_slow);

    const DesignResult ok = classify_design(ctx, 0.2, 0.0, Receiver::jdr);
    CHECK(ok.design_case == DesignCase::feasible);
    CHECK(ok.atw > 0.0);
    const OraclePoint o = sweep_oracle(0.2, 0.0);
    CHECK(rel_err(ok.atw, static_cast<double>(o.atw_jdr)) < 1e-9);

    CHECK_THROWS_AS(classify_design(ctx, -0.1, 0.0, Receiver::jdr), std::domain_error);
    CHECK_THROWS_AS(classify_design(ctx, 1.6, 0.0, Receiver::jdr), std::domain_error);
}

TEST_CASE("design case agrees with the clamped ATW formula") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> el(0.0, kHalfPi * 0.999);
    std::uniform_real_distribution<double> loss(0.0, 30.0);
    for (int i = 0; i < 500; ++i) {
        const double theta = el(rng);
        const double db = loss(rng);
        for (Receiver rx : {Receiver::ssr, Receiver::jdr}) {
            const DesignResult d = classify_design(default_context(), theta, db, rx);
            const double clamped = atw(pass_duration(PassGeometry{}), d.start_time, d.ttr, 1.5);
            CHECK((d.design_case == DesignCase::too_slow) == (clamped == 0.0));
            CHECK(d.atw == doctest::Approx(clamped).epsilon(1e-12));
        }
    }
}

TEST_CASE("elevation sweep matches the independent oracle") {
    const ReadingContext ctx = default_context();
    const auto grid = uniform_elevation_grid(50);
    for (double db : {0.0, 10.0, 22.0}) {
        const auto pts = elevation_sweep(ctx, db, grid);
        REQUIRE(pts.size() == grid.size());
        for (const SweepPoint& p : pts) {
            const OraclePoint o = sweep_oracle(p.start_elevation, db);
            INFO("theta=" << p.start_elevation << " db=" << db);
            CHECK(rel_err(p.ttr_classical, static_cast<double>(o.ttr_ssr)) < 1e-9);
            CHECK(rel_err(p.ttr_quantum, static_cast<double>(o.ttr_jdr)) < 1e-9);
            CHECK(std::abs(p.atw_classical - static_cast<double>(o.atw_ssr)) < 1e-6);
            CHECK(std::abs(p.atw_quantum - static_cast<double>(o.atw_jdr)) < 1e-6);
            CHECK(p.ttr_effective_classical == 1.5 * p.ttr_classical);
            CHECK(p.ttr_effective_quantum == 1.5 * p.ttr_quantum);
        }
    }
}

TEST_CASE("sweep examples") {
    ReadingContext ctx = default_context();
    const double total = pass_duration(ctx.geometry);
    const double zenith[] = {kHalfPi};
    const auto top = elevation_sweep(ctx, 0.0, zenith);
    CHECK(top[0].ttr_effective_quantum == doctest::Approx(0.51).epsilon(0.01));

    const double low[] = {0.01};
    const auto horizon = elevation_sweep(ctx, 0.0, low);
    const OraclePoint o = sweep_oracle(0.01, 0.0);
    CHECK(horizon[0].ttr_effective_classical ==
          doctest::Approx(1.5 * static_cast<double>(o.ttr_ssr)));
    CHECK(horizon[0].ttr_effective_classical > 1.5 * 18.0);
    // Nearly the whole pass remains available to the joint-detection receiver.
    CHECK(horizon[0].atw_quantum > 0.98 * total);

    // 22 dB plus the fitted offset: the SSR cannot read at any start elevation.
    ctx.loss_offset_db = 5.97;
    for (const SweepPoint& p : elevation_sweep(ctx, 22.0, uniform_elevation_grid(100))) {
        CHECK(p.ttr_effective_classical > total);
        CHECK(p.atw_classical == 0.0);
    }
}

TEST_CASE("sweep invariants") {
    const ReadingContext ctx = default_context();
    const auto grid = uniform_elevation_grid(200);
    const auto clear = elevation_sweep(ctx, 0.0, grid);
    const auto hazy = elevation_sweep(ctx, 10.0, grid);
    const auto rain = elevation_sweep(ctx, 22.0, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        for (const auto* s : {&clear, &hazy, &rain}) {
            const SweepPoint& p = (*s)[i];
            CHECK(p.ttr_quantum <= p.ttr_classical);
            CHECK(p.atw_quantum >= p.atw_classical);
            CHECK(p.atw_classical >= 0.0);
        }
        CHECK(clear[i].atw_quantum >= hazy[i].atw_quantum);
        CHECK(hazy[i].atw_quantum >= rain[i].atw_quantum);
        CHECK(clear[i].atw_classical >= hazy[i].atw_classical);
        CHECK(hazy[i].atw_classical >= rain[i].atw_classical);

        const double range = slant_range(ctx.geometry, grid[i]);
        const double c = capacity_at(ctx, range, 10.0, Receiver::ssr);
        CHECK(rel_err(hazy[i].ttr_classical * c, 20.0) < 1e-12);
    }
}

TEST_CASE("sweep input validation") {
    const ReadingContext ctx = default_context();
    CHECK_THROWS_AS(elevation_sweep(ctx, 0.0, std::span<const double>{}), std::domain_error);
    const double bad[] = {-0.2};
    CHECK_THROWS_AS(elevation_sweep(ctx, 0.0, bad), std::domain_error);
    CHECK_THROWS_AS(uniform_elevation_grid(1), std::domain_error);
    const auto g = uniform_elevation_grid(2);
    CHECK(g.front() == 0.01);
    CHECK(g.back() == kHalfPi);
}

TEST_CASE("zero signal is modeled, not an error") {
    ReadingContext ctx = default_context();
    ctx.link.calibrated_signal_rate = 0.0;
    const double grid[] = {0.5};
    const auto pts = elevation_sweep(ctx, 0.0, grid);
    CHECK(pts[0].ttr_quantum == kInf);
    CHECK(pts[0].atw_quantum == 0.0);
}

TEST_CASE("arrival rate") {
    PassGeometry g;
    CHECK(rel_err(arrival_rate(g, 1'000'000), 1e6 / beacon_ref::kPeriod1000km) < 1e-12);
    CHECK(arrival_rate(g, 1'000'000) == doctest::Approx(158.8).epsilon(0.01));
    CHECK(arrival_rate(g, 1) == doctest::Approx(1.0 / orbital_period(g)));
    g.altitude = 400e3;
    CHECK(arrival_rate(g, 1'000'000) == doctest::Approx(180.1).epsilon(0.01));
    CHECK_THROWS_AS(arrival_rate(g, 0), std::domain_error);
}

TEST_CASE("receiver mapping") {
    CHECK(capacity_kind(Receiver::ssr) == CapacityKind::homodyne);
    CHECK(capacity_kind(Receiver::jdr) == CapacityKind::holevo);
    CHECK(parse_receiver("jdr") == Receiver::jdr);
    CHECK_FALSE(parse_receiver("JDR").has_value());
}
