#pragma once

#include <numbers>
#include <optional>
#include <string_view>

#include "beacon/capacity.hpp"

namespace beacon {

inline constexpr double kPlanck = 6.62607015e-34;     // J s
inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

// Transmittance value quoted alongside the beacon's published link budget. It
// does not follow from the aperture/solid-angle equation (which gives
// ~5.24e-16 at 1000 km); kept only for side-by-side reporting.
inline constexpr double kQuotedTransmittance = 5.15e-15;

enum class SignalMode {
    calibrated,        // anchored to a measured detected rate at a reference range
    first_principles,  // emitted rate times geometric transmittance
};

std::string_view to_string(SignalMode mode);
std::optional<SignalMode> parse_signal_mode(std::string_view text);

// Beacon and ground-receiver parameters. All lengths in meters, powers in
// watts, times in seconds, losses in power decibels.
struct LinkBudget {
    double wavelength = 638e-9;
    double peak_power = 1.0;
    double pulse_width = 2e-6;
    double pulse_interval = 500e-6;
    double fraction_ones = 0.5;
    double emission_solid_angle = 2.0 * std::numbers::pi;
    double telescope_diameter = 0.36;
    double filter_transmission = 0.83;
    double filter_bandwidth = 1e-13;  // narrowed from the 10 nm reference filter
    double solar_spectral_flux = 1.654;  // W m^-2 nm^-1, carried only
    double detector_quantum_efficiency = 0.039;
    double albedo_area_cubesat = 0.00053;  // m^2, carried only
    double albedo_area_1m = 0.053;         // m^2, carried only
    double base_noise_rate = 91.0;         // photons/s through the reference filter
    double noise_reference_bandwidth = 10e-9;
    double distance = 1e6;
    double extra_loss = 0.0;

    // When set, detected_noise_rate returns this verbatim instead of scaling
    // base_noise_rate with the filter bandwidth.
    std::optional<double> canonical_noise_rate = 0.01;

    SignalMode signal_mode = SignalMode::calibrated;
    double calibrated_signal_rate = 3.0;  // detected photons/s at calibration_distance, 0 dB
    double calibration_distance = 1e6;

    double modulation_bandwidth = 1e6;  // symbols/s

    void validate() const;
};

struct DetectedRates {
    double transmittance = 0.0;
    double emitted_photon_rate = 0.0;
    double detected_signal_rate = 0.0;
    double detected_noise_rate = 0.0;
};

double aperture_area(double diameter);

/// gamma = A tau eps / (Omega r^2), with tau the filter transmission. Weather
/// and atmosphere enter separately through extra_loss.
double transmittance(const LinkBudget& lb);

/// Mean emitted photons per second: peak power times duty cycle times the
/// fraction of "on" symbols, divided by the photon energy.
double emitted_photon_rate(const LinkBudget& lb);

double detected_signal_rate(const LinkBudget& lb, SignalMode mode);
inline double detected_signal_rate(const LinkBudget& lb) {
    return detected_signal_rate(lb, lb.signal_mode);
}

double detected_noise_rate(const LinkBudget& lb);

/// Power attenuation factor 10^(-loss/10).
double db_to_linear(double loss_db);

DetectedRates detected_rates(const LinkBudget& lb);

// Detected rates in the form the capacity formulas take: the signal rate is
// already post-channel, so transmittance is 1.
RateParams detected_rate_params(const LinkBudget& lb);

// Copy of `lb` with the path replaced.
LinkBudget with_path(LinkBudget lb, double distance, double extra_loss);

}  // namespace beacon
