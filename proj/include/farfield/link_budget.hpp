// SPDX-License-Identifier: Apache-2.0

#ifndef FARFIELD_LINK_BUDGET_HPP
#define FARFIELD_LINK_BUDGET_HPP

#include <optional>

#include "farfield/element_pattern.hpp"
#include "farfield/geometry.hpp"
#include "farfield/quantities.hpp"

namespace farfield {

/// Radio-side inputs of the SNR requirement. All linear SI except the dB
/// fields, which are converted where they are used.
struct LinkBudgetParams {
    double pt_w = dbm_to_watts(23.0);
    double nf_db = 10.0;
    double temperature_k = 290.0;
    double snr_th_db = 30.0;
    CosinePattern pattern{1.0};
    PhysicalConstants constants = PhysicalConstants::codata();

    /// Throws DomainError on pt <= 0, temperature <= 0 or nf < 0 dB.
    void validate() const;

    [[nodiscard]] double snr_threshold_linear() const { return db_to_linear(snr_th_db); }
    [[nodiscard]] double noise_factor() const { return db_to_linear(nf_db); }
};

struct GainPair {
    double gain_ap = 1.0;
    double gain_ue = 1.0;
};

/// Element power losses |f|^2 on each side. The UE side sees the UE
/// rotation angles, the AP side the relative (direction-variation) angles.
struct ElementLoss {
    double ue = 1.0;
    double ap = 1.0;

    [[nodiscard]] double combined() const { return ue * ap; }
};

ElementLoss element_loss(const CosinePattern& pattern, const RotationState& rotation);

/// N^2 * G0 * |f(theta, phi)|^2 for an N x N half-wavelength array.
double array_gain(int n_side, const CosinePattern& pattern, double theta, double phi);

/// Same gain with the continuous element count N = 2 D / lambda.
double aperture_gain(double aperture, double wavelength, const CosinePattern& pattern,
                     double theta, double phi);

/// Boresight-steered gains for the given apertures and rotation.
GainPair steered_gains(const ApertureGeometry& g, const CosinePattern& pattern,
                       const RotationState& rotation);

/// Free-space LoS SNR: Pt G_AP G_UE / N0 * (lambda / (4 pi d))^2.
double snr_at_distance(const LinkBudgetParams& lb, const GainPair& gains, double wavelength,
                       double distance, double bandwidth);

/// Minimum D1 * D2 (m^2) meeting the SNR threshold at d_max, where `loss` is
/// the combined element power loss in (0, 1]. Returns nullopt on an element
/// null (loss == 0).
std::optional<double> aperture_product_requirement(const LinkBudgetParams& lb, double wavelength,
                                                   double d_max, double bandwidth, double loss);

/// Minimum transmit PSD in dBm/Hz for far-field-only stationary operation.
double required_psd(const LinkBudgetParams& lb);

}  // namespace farfield

#endif  // FARFIELD_LINK_BUDGET_HPP
