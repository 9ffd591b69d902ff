#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "beacon/passgeom.hpp"
#include "oracles/reference_values.hpp"
#include "test_util.hpp"

using namespace beacon;
using beacon_test::rel_err;

namespace {
constexpr double kHalfPi = std::numbers::pi / 2;
}

TEST_CASE("slant range") {
    const PassGeometry g;
    CHECK(slant_range(g, kHalfPi) == 1000e3);
    CHECK(rel_err(slant_range(g, 0.0), beacon_ref::kSlantHorizon1000km) < 1e-12);
    CHECK(slant_range(g, 0.0) == doctest::Approx(std::sqrt(7371e3 * 7371e3 - 6371e3 * 6371e3)));
    CHECK(rel_err(slant_range(g, 0.1), beacon_ref::kSlant0p1rad1000km) < 1e-12);
    CHECK(slant_range(g, 0.1) == doctest::Approx(3125e3).epsilon(1e-3));
    CHECK(rel_err(slant_range(g, 4.5 * std::numbers::pi / 180), beacon_ref::kSlant4p5deg1000km) <
          1e-12);
    CHECK_THROWS_AS(slant_range(g, -0.01), std::domain_error);
    CHECK_THROWS_AS(slant_range(g, kHalfPi + 1e-9), std::domain_error);

    PassGeometry low = g;
    low.altitude = 400e3;
    CHECK(slant_range(low, kHalfPi) == 400e3);
}

TEST_CASE("slant range is decreasing and satisfies the law of cosines") {
    const PassGeometry g;
    const double re = g.earth_radius;
    const double rs = re + g.altitude;
    double prev = INFINITY;
    for (int i = 0; i <= 1000; ++i) {
        const double theta = kHalfPi * i / 1000.0;
        const double r = slant_range(g, i == 1000 ? kHalfPi : theta);
        CHECK(r < prev);
        prev = r;
        const double lhs = r * r + 2.0 * r * re * std::sin(theta) + re * re;
        CHECK(rel_err(lhs, rs * rs) < 1e-9);
    }
}

TEST_CASE("orbital period") {
    PassGeometry g;
    CHECK(rel_err(orbital_period(g), beacon_ref::kPeriod1000km) < 1e-12);
    CHECK(orbital_period(g) == doctest::Approx(6297.9).epsilon(1e-3));
    g.altitude = 400e3;
    CHECK(rel_err(orbital_period(g), beacon_ref::kPeriod400km) < 1e-12);

    const double sidereal_day = 86164.0;
    const double r = std::cbrt(g.gravitational_parameter *
                               std::pow(sidereal_day / (2.0 * std::numbers::pi), 2));
    g.altitude = r - g.earth_radius;
    CHECK(orbital_period(g) == doctest::Approx(sidereal_day).epsilon(1e-12));
}

TEST_CASE("pass duration") {
    PassGeometry g;
    CHECK(rel_err(pass_duration(g), beacon_ref::kPassDuration1000km) < 1e-12);
    CHECK(pass_duration(g) >= 1049.0);
    CHECK(pass_duration(g) <= 1065.0);
    CHECK(pass_duration(g) == doctest::Approx(1054.0).epsilon(0.01));

    g.altitude = 1.0;
    CHECK(pass_duration(g) < 1.0);

    PassGeometry masked;
    masked.min_elevation = kHalfPi - 1e-12;
    CHECK(pass_duration(masked) < 1e-6);
    masked.min_elevation = kHalfPi;
    CHECK_THROWS_AS(pass_duration(masked), std::domain_error);

    PassGeometry ten_deg;
    ten_deg.min_elevation = 10.0 * std::numbers::pi / 180;
    CHECK(pass_duration(ten_deg) < pass_duration(PassGeometry{}));
}

TEST_CASE("time from rise") {
    const PassGeometry g;
    CHECK(time_from_rise(g, 0.0) == 0.0);
    CHECK(time_from_rise(g, kHalfPi) == doctest::Approx(pass_duration(g) / 2).epsilon(1e-14));
    CHECK(rel_err(time_from_rise(g, 0.2), beacon_ref::kTimeFromRise0p2rad1000km) < 1e-10);
    CHECK(rel_err(time_from_rise(g, 0.7), beacon_ref::kTimeFromRise0p7rad1000km) < 1e-10);
    CHECK_THROWS_AS(time_from_rise(g, -0.1), std::domain_error);

    PassGeometry masked;
    masked.min_elevation = 0.1;
    CHECK(time_from_rise(masked, 0.1) == 0.0);
    CHECK_THROWS_AS(time_from_rise(masked, 0.05), std::domain_error);

    double prev = -1.0;
    for (int i = 0; i <= 200; ++i) {
        const double t = time_from_rise(g, i == 200 ? kHalfPi : kHalfPi * i / 200.0);
        CHECK(t > prev);
        prev = t;
    }
}

TEST_CASE("elevation at time") {
    const PassGeometry g;
    const double total = pass_duration(g);
    CHECK(elevation_at_time(g, 0.0) == 0.0);
    CHECK(elevation_at_time(g, total / 2) == doctest::Approx(kHalfPi).epsilon(1e-9));
    CHECK(elevation_at_time(g, total) == 0.0);
    CHECK(elevation_at_time(g, time_from_rise(g, 0.2)) == doctest::Approx(0.2).epsilon(1e-10));
    CHECK_THROWS_AS(elevation_at_time(g, -1.0), std::domain_error);
    CHECK_THROWS_AS(elevation_at_time(g, total + 1.0), std::domain_error);

    for (int i = 0; i < 100; ++i) {
        const double t = total * i / 99.0;
        const double theta = elevation_at_time(g, t);
        const double back = t > total / 2 ? total - time_from_rise(g, theta)
                                          : time_from_rise(g, theta);
        CHECK(std::abs(back - t) < 1e-6);
    }
    // Descending half mirrors the ascending half.
    CHECK(elevation_at_time(g, total - 100.0) == doctest::Approx(elevation_at_time(g, 100.0)));
}

TEST_CASE("geometry validation") {
    PassGeometry g;
    g.altitude = 0.0;
    CHECK_THROWS_AS(orbital_period(g), std::domain_error);
    g = {};
    g.gravitational_parameter = -1.0;
    CHECK_THROWS_AS(orbital_period(g), std::domain_error);
    g = {};
    g.min_elevation = -0.1;
    CHECK_THROWS_AS(g.validate(), std::domain_error);
}
