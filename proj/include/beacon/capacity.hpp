#pragma once

#include <optional>
#include <string_view>

namespace beacon {

// Per-channel-use description of the thermal-loss bosonic channel.
struct ChannelUseParams {
    double transmittance = 1.0;        // gamma, fraction in [0, 1]
    double mean_signal_photons = 0.0;  // E, photons per use before the channel
    double mean_noise_photons = 0.0;   // N, photons per use at the detector

    // Throws std::domain_error when an invariant is violated.
    void validate() const;

    double received_signal() const { return transmittance * mean_signal_photons; }
};

// Rate-domain description; per-use values follow as rate / bandwidth.
struct RateParams {
    double transmittance = 1.0;
    double signal_photon_rate = 0.0;    // photons/s, emitted (pre-channel)
    double noise_photon_rate = 0.0;     // photons/s at the detector
    double modulation_bandwidth = 1e6;  // B, symbols/s

    void validate() const;
    ChannelUseParams per_use() const;
};

enum class CapacityKind { holevo, homodyne, heterodyne };

std::string_view to_string(CapacityKind kind);
std::optional<CapacityKind> parse_capacity_kind(std::string_view text);

struct CapacityValue {
    double bits_per_use = 0.0;
    std::optional<double> bits_per_second;
};

/// Gordon function g(x) = (x+1)log2(x+1) - x log2(x), the entropy in bits of
/// a thermal state with mean photon number x. Evaluated as
/// log2(1+x) + x log2(1+1/x), which keeps full relative precision from
/// x ~ 1e-15 up to x ~ 1e12 without any regime switching.
double gordon(double x);

/// g(a + d) - g(a) for a, d >= 0, without the cancellation of subtracting two
/// Gordon values when d << a.
double gordon_increment(double base, double increment);

/// Holevo capacity g(gamma E + N) - g(N) of the thermal-loss channel, bits/use.
double holevo_capacity(const ChannelUseParams& p);

/// Shot-noise limited AWGN capacity with homodyne detection,
/// 1/2 log2(1 + 4 gamma E / (2N + 1)), bits/use.
double shannon_homodyne(const ChannelUseParams& p);

/// Heterodyne counterpart, log2(1 + gamma E / (N + 1)), bits/use.
double shannon_heterodyne(const ChannelUseParams& p);

double capacity_per_use(const ChannelUseParams& p, CapacityKind kind);

/// B * C(gamma, E_rate / B, N_rate / B).
double capacity_per_second(const RateParams& r, CapacityKind kind);

CapacityValue capacity_value(const ChannelUseParams& p, CapacityKind kind);
CapacityValue capacity_value(const RateParams& r, CapacityKind kind);

// Two forms of the homodyne SNR in the rate domain. `published` is
// 2 gamma E / (4N + B); `per_use_consistent` is 4 gamma E / (2N + B), which is
// what the per-use homodyne formula reduces to after rate scaling.
struct SnrReport {
    double published = 0.0;
    double per_use_consistent = 0.0;
};

SnrReport homodyne_snr(const RateParams& r);

}  // namespace beacon
