#include "beacon/linkbudget.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace beacon {
namespace {

void require_positive(double v, const char* what) {
    if (!std::isfinite(v) || v <= 0.0) {
        throw std::domain_error(std::string(what) + " must be finite and > 0");
    }
}

void require_non_negative(double v, const char* what) {
    if (!std::isfinite(v) || v < 0.0) {
        throw std::domain_error(std::string(what) + " must be finite and >= 0");
    }
}

}  // namespace

std::string_view to_string(SignalMode mode) {
    return mode == SignalMode::calibrated ? "calibrated" : "first_principles";
}

std::optional<SignalMode> parse_signal_mode(std::string_view text) {
    if (text == "calibrated") return SignalMode::calibrated;
    if (text == "first_principles") return SignalMode::first_principles;
    return std::nullopt;
}

void LinkBudget::validate() const {
    require_positive(wavelength, "wavelength");
    require_positive(peak_power, "peak_power");
    require_positive(pulse_width, "pulse_width");
    require_positive(pulse_interval, "pulse_interval");
    if (pulse_width > pulse_interval) {
        throw std::domain_error("pulse_width must not exceed pulse_interval");
    }
    if (!(fraction_ones >= 0.0 && fraction_ones <= 1.0)) {
        throw std::domain_error("fraction_ones must be in [0, 1]");
    }
    require_positive(emission_solid_angle, "emission_solid_angle");
    require_positive(telescope_diameter, "telescope_diameter");
    require_positive(filter_transmission, "filter_transmission");
    require_positive(filter_bandwidth, "filter_bandwidth");
    require_positive(solar_spectral_flux, "solar_spectral_flux");
    require_positive(detector_quantum_efficiency, "detector_quantum_efficiency");
    require_positive(albedo_area_cubesat, "albedo_area_cubesat");
    require_positive(albedo_area_1m, "albedo_area_1m");
    require_non_negative(base_noise_rate, "base_noise_rate");
    require_positive(noise_reference_bandwidth, "noise_reference_bandwidth");
    require_positive(distance, "distance");
    require_non_negative(extra_loss, "extra_loss");
    if (canonical_noise_rate) require_non_negative(*canonical_noise_rate, "canonical_noise_rate");
    require_non_negative(calibrated_signal_rate, "calibrated_signal_rate");
    require_positive(calibration_distance, "calibration_distance");
    require_positive(modulation_bandwidth, "modulation_bandwidth");
}

double aperture_area(double diameter) {
    require_positive(diameter, "telescope_diameter");
    const double radius = 0.5 * diameter;
    return std::numbers::pi * radius * radius;
}

double transmittance(const LinkBudget& lb) {
    lb.validate();
    const double area = aperture_area(lb.telescope_diameter);
    return area * lb.filter_transmission * lb.detector_quantum_efficiency /
           (lb.emission_solid_angle * lb.distance * lb.distance);
}

double emitted_photon_rate(const LinkBudget& lb) {
    lb.validate();
    const double photon_energy = kPlanck * kSpeedOfLight / lb.wavelength;
    const double duty_cycle = lb.pulse_width / lb.pulse_interval;
    return lb.peak_power * duty_cycle * lb.fraction_ones / photon_energy;
}

double detected_signal_rate(const LinkBudget& lb, SignalMode mode) {
    lb.validate();
    const double loss = db_to_linear(lb.extra_loss);
    if (mode == SignalMode::first_principles) {
        return emitted_photon_rate(lb) * transmittance(lb) * loss;
    }
    const double ratio = lb.calibration_distance / lb.distance;
    return lb.calibrated_signal_rate * ratio * ratio * loss;
}

double detected_noise_rate(const LinkBudget& lb) {
    lb.validate();
    if (lb.canonical_noise_rate) return *lb.canonical_noise_rate;
    // Background scales linearly with the optical passband; no dark counts.
    return lb.base_noise_rate * (lb.filter_bandwidth / lb.noise_reference_bandwidth);
}

double db_to_linear(double loss_db) {
    if (!std::isfinite(loss_db)) throw std::domain_error("loss must be finite");
    return std::pow(10.0, -loss_db / 10.0);
}

DetectedRates detected_rates(const LinkBudget& lb) {
    return {transmittance(lb), emitted_photon_rate(lb), detected_signal_rate(lb),
            detected_noise_rate(lb)};
}

RateParams detected_rate_params(const LinkBudget& lb) {
    return {1.0, detected_signal_rate(lb), detected_noise_rate(lb), lb.modulation_bandwidth};
}

LinkBudget with_path(LinkBudget lb, double distance, double extra_loss) {
    lb.distance = distance;
    lb.extra_loss = extra_loss;
    return lb;
}

}  // namespace beacon
