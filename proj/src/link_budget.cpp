// SPDX-License-Identifier: Apache-2.0

#include "farfield/link_budget.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

namespace farfield {

void LinkBudgetParams::validate() const {
    detail::require_positive(pt_w, "transmit power");
    detail::require_positive(temperature_k, "temperature");
    if (!(nf_db >= 0.0) || !std::isfinite(nf_db)) {
        throw DomainError(fmt::format("noise figure must be >= 0 dB (got {})", nf_db));
    }
    if (!std::isfinite(snr_th_db)) throw DomainError("SNR threshold must be finite");
    detail::require_positive(constants.boltzmann, "Boltzmann constant");
    detail::require_positive(constants.speed_of_light, "speed of light");
}

ElementLoss element_loss(const CosinePattern& pattern, const RotationState& rotation) {
    return {pattern.power(rotation.theta_ue(), rotation.phi_ue()),
            pattern.power(rotation.theta_rel(), rotation.phi_rel())};
}

double array_gain(int n_side, const CosinePattern& pattern, double theta, double phi) {
    if (n_side < 1) throw DomainError(fmt::format("array side must be >= 1 (got {})", n_side));
    const double n = n_side;
    return n * n * pattern.normalization_constant() * pattern.power(theta, phi);
}

double aperture_gain(double aperture, double wavelength, const CosinePattern& pattern,
                     double theta, double phi) {
    detail::require_positive(aperture, "aperture");
    detail::require_positive(wavelength, "wavelength");
    const double n = 2.0 * aperture / wavelength;
    return n * n * pattern.normalization_constant() * pattern.power(theta, phi);
}

GainPair steered_gains(const ApertureGeometry& g, const CosinePattern& pattern,
                       const RotationState& rotation) {
    return {aperture_gain(g.d1, g.wavelength, pattern, rotation.theta_rel(), rotation.phi_rel()),
            aperture_gain(g.d2, g.wavelength, pattern, rotation.theta_ue(), rotation.phi_ue())};
}

double snr_at_distance(const LinkBudgetParams& lb, const GainPair& gains, double wavelength,
                       double distance, double bandwidth) {
    lb.validate();
    detail::require_positive(distance, "distance");
    detail::require_positive(wavelength, "wavelength");
    const double n0 = noise_power(bandwidth, lb.nf_db, lb.temperature_k, lb.constants);
    const double path = wavelength / (4.0 * std::numbers::pi * distance);
    return lb.pt_w * gains.gain_ap * gains.gain_ue / n0 * path * path;
}

std::optional<double> aperture_product_requirement(const LinkBudgetParams& lb, double wavelength,
                                                   double d_max, double bandwidth, double loss) {
    lb.validate();
    detail::require_positive(wavelength, "wavelength");
    detail::require_positive(d_max, "d_max");
    detail::require_positive(bandwidth, "bandwidth");
    if (!(loss >= 0.0 && loss <= 1.0)) {
        throw DomainError(fmt::format("element loss must lie in [0, 1] (got {})", loss));
    }
    if (loss == 0.0) return std::nullopt;
    const double z = lb.noise_factor() * lb.constants.boltzmann * lb.temperature_k * bandwidth /
                     lb.pt_w;
    return wavelength * std::numbers::pi * d_max /
           (lb.pattern.normalization_constant() * std::sqrt(loss)) * std::sqrt(z) *
           std::pow(10.0, lb.snr_th_db / 20.0);
}

double required_psd(const LinkBudgetParams& lb) {
    lb.validate();
    // 10 log10(256 pi^2) + 30 dB(mW/W); printed in rounded form as 64.
    const double offset_db = 10.0 * std::log10(256.0 * std::numbers::pi * std::numbers::pi) + 30.0;
    return offset_db + lb.snr_th_db + lb.nf_db +
           10.0 * std::log10(lb.constants.boltzmann * lb.temperature_k) -
           20.0 * std::log10(lb.pattern.normalization_constant());
}

}  // namespace farfield
