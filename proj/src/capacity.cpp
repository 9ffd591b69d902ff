#include "beacon/capacity.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace beacon {
namespace {

constexpr double kInvLn2 = 1.0 / std::numbers::ln2;

void require_non_negative(double v, const char* what) {
    if (!std::isfinite(v) || v < 0.0) {
        throw std::domain_error(std::string(what) + " must be finite and >= 0");
    }
}

}  // namespace

void ChannelUseParams::validate() const {
    require_non_negative(transmittance, "transmittance");
    if (transmittance > 1.0) throw std::domain_error("transmittance must be <= 1");
    require_non_negative(mean_signal_photons, "mean_signal_photons");
    require_non_negative(mean_noise_photons, "mean_noise_photons");
}

void RateParams::validate() const {
    require_non_negative(transmittance, "transmittance");
    if (transmittance > 1.0) throw std::domain_error("transmittance must be <= 1");
    require_non_negative(signal_photon_rate, "signal_photon_rate");
    require_non_negative(noise_photon_rate, "noise_photon_rate");
    if (!std::isfinite(modulation_bandwidth) || modulation_bandwidth <= 0.0) {
        throw std::domain_error("modulation_bandwidth must be finite and > 0");
    }
}

ChannelUseParams RateParams::per_use() const {
    validate();
    return {transmittance, signal_photon_rate / modulation_bandwidth,
            noise_photon_rate / modulation_bandwidth};
}

std::string_view to_string(CapacityKind kind) {
    switch (kind) {
        case CapacityKind::holevo: return "holevo";
        case CapacityKind::homodyne: return "homodyne";
        case CapacityKind::heterodyne: return "heterodyne";
    }
    return "?";
}

std::optional<CapacityKind> parse_capacity_kind(std::string_view text) {
    if (text == "holevo") return CapacityKind::holevo;
    if (text == "homodyne") return CapacityKind::homodyne;
    if (text == "heterodyne") return CapacityKind::heterodyne;
    return std::nullopt;
}

double gordon(double x) {
    require_non_negative(x, "gordon argument");
    if (x == 0.0) return 0.0;
    return (std::log1p(x) + x * std::log1p(1.0 / x)) * kInvLn2;
}

double gordon_increment(double base, double increment) {
    require_non_negative(base, "gordon base");
    require_non_negative(increment, "gordon increment");
    if (increment == 0.0) return 0.0;
    if (base == 0.0) return gordon(increment);
    // g(a+d) - g(a) = d ln(1 + 1/(a+d)) + (a+1) ln(1 + d/(a+1)) - a ln(1 + d/a)
    // The last two terms agree to first order in d; their difference is
    // O(d^2/a^2) and the rounding left over is ~eps*d, so the result keeps
    // relative accuracy ~eps*a even when d is far below eps*a.
    const double a = base;
    const double d = increment;
    const double lead = d * std::log1p(1.0 / (a + d));
    const double bracket = (a + 1.0) * std::log1p(d / (a + 1.0)) - a * std::log1p(d / a);
    const double nats = lead + bracket;
    return nats > 0.0 ? nats * kInvLn2 : 0.0;
}

double holevo_capacity(const ChannelUseParams& p) {
    p.validate();
    return gordon_increment(p.mean_noise_photons, p.received_signal());
}

double shannon_homodyne(const ChannelUseParams& p) {
    p.validate();
    const double snr = 4.0 * p.received_signal() / (2.0 * p.mean_noise_photons + 1.0);
    return 0.5 * std::log1p(snr) * kInvLn2;
}

double shannon_heterodyne(const ChannelUseParams& p) {
    p.validate();
    return std::log1p(p.received_signal() / (p.mean_noise_photons + 1.0)) * kInvLn2;
}

double capacity_per_use(const ChannelUseParams& p, CapacityKind kind) {
    switch (kind) {
        case CapacityKind::holevo: return holevo_capacity(p);
        case CapacityKind::homodyne: return shannon_homodyne(p);
        case CapacityKind::heterodyne: return shannon_heterodyne(p);
    }
    throw std::invalid_argument("unknown capacity kind");
}

double capacity_per_second(const RateParams& r, CapacityKind kind) {
    return r.modulation_bandwidth * capacity_per_use(r.per_use(), kind);
}

CapacityValue capacity_value(const ChannelUseParams& p, CapacityKind kind) {
    return {capacity_per_use(p, kind), std::nullopt};
}

CapacityValue capacity_value(const RateParams& r, CapacityKind kind) {
    const double per_use = capacity_per_use(r.per_use(), kind);
    return {per_use, r.modulation_bandwidth * per_use};
}

SnrReport homodyne_snr(const RateParams& r) {
    r.validate();
    const double signal = r.transmittance * r.signal_photon_rate;
    const double noise = r.noise_photon_rate;
    const double b = r.modulation_bandwidth;
    return {2.0 * signal / (4.0 * noise + b), 4.0 * signal / (2.0 * noise + b)};
}

}  // namespace beacon
