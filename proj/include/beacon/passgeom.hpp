#pragma once

namespace beacon {

inline constexpr double kEarthMeanRadius = 6371e3;        // m
inline constexpr double kEarthGravParameter = 3.986004418e14;  // m^3/s^2

// Circular orbit over a spherical, non-rotating Earth, with the ground track
// passing through the station's zenith. Angles in radians.
struct PassGeometry {
    double altitude = 1000e3;
    double earth_radius = kEarthMeanRadius;
    double gravitational_parameter = kEarthGravParameter;
    double min_elevation = 0.0;

    void validate() const;
};

/// Line-of-sight distance to the satellite at elevation `elevation`.
double slant_range(const PassGeometry& g, double elevation);

double orbital_period(const PassGeometry& g);

/// Earth-central angle between the sub-satellite point and the station when
/// the satellite is seen at `elevation`.
double central_angle(const PassGeometry& g, double elevation);

/// Time spent above min_elevation on an overhead pass.
double pass_duration(const PassGeometry& g);

/// Seconds since the satellite rose through min_elevation on the ascending
/// half of the pass.
double time_from_rise(const PassGeometry& g, double elevation);

/// Inverse of time_from_rise over the whole pass; times past mid-pass mirror
/// onto the descending half. Solved by bisection to 1e-10 rad or better.
double elevation_at_time(const PassGeometry& g, double t);

}  // namespace beacon
