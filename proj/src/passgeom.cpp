#include "beacon/passgeom.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace beacon {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

void require_elevation(double elevation, double lo) {
    if (!(elevation >= lo && elevation <= kHalfPi)) {
        throw std::domain_error("elevation " + std::to_string(elevation) +
                                " rad outside [" + std::to_string(lo) + ", pi/2]");
    }
}

}  // namespace

void PassGeometry::validate() const {
    if (!std::isfinite(altitude) || altitude <= 0.0) {
        throw std::domain_error("altitude must be finite and > 0");
    }
    if (!std::isfinite(earth_radius) || earth_radius <= 0.0) {
        throw std::domain_error("earth_radius must be finite and > 0");
    }
    if (!std::isfinite(gravitational_parameter) || gravitational_parameter <= 0.0) {
        throw std::domain_error("gravitational_parameter must be finite and > 0");
    }
    if (!(min_elevation >= 0.0 && min_elevation < kHalfPi)) {
        throw std::domain_error("min_elevation must be in [0, pi/2)");
    }
}

double slant_range(const PassGeometry& g, double elevation) {
    g.validate();
    require_elevation(elevation, 0.0);
    if (elevation == kHalfPi) return g.altitude;
    const double re = g.earth_radius;
    const double rs = re + g.altitude;
    const double c = re * std::cos(elevation);
    const double s = re * std::sin(elevation);
    // sqrt(rs^2 - c^2) - s, rationalised to avoid cancellation near zenith.
    return g.altitude * (2.0 * re + g.altitude) / (std::sqrt(rs * rs - c * c) + s);
}

double orbital_period(const PassGeometry& g) {
    g.validate();
    const double rs = g.earth_radius + g.altitude;
    return 2.0 * std::numbers::pi * std::sqrt(rs * rs * rs / g.gravitational_parameter);
}

double central_angle(const PassGeometry& g, double elevation) {
    g.validate();
    require_elevation(elevation, 0.0);
    const double rs = g.earth_radius + g.altitude;
    return std::acos(g.earth_radius * std::cos(elevation) / rs) - elevation;
}

double pass_duration(const PassGeometry& g) {
    return orbital_period(g) * central_angle(g, g.min_elevation) / std::numbers::pi;
}

double time_from_rise(const PassGeometry& g, double elevation) {
    g.validate();
    require_elevation(elevation, g.min_elevation);
    const double swept = central_angle(g, g.min_elevation) - central_angle(g, elevation);
    return swept * orbital_period(g) / (2.0 * std::numbers::pi);
}

double elevation_at_time(const PassGeometry& g, double t) {
    const double total = pass_duration(g);
    if (!(t >= 0.0 && t <= total)) {
        throw std::domain_error("time " + std::to_string(t) + " s outside the pass [0, " +
                                std::to_string(total) + "]");
    }
    const double target = t > 0.5 * total ? total - t : t;
    if (target == 0.0) return g.min_elevation;
    if (target == 0.5 * total) return kHalfPi;
    double lo = g.min_elevation;
    double hi = kHalfPi;
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (time_from_rise(g, mid) < target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace beacon
