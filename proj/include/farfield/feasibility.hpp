// SPDX-License-Identifier: Apache-2.0

#ifndef FARFIELD_FEASIBILITY_HPP
#define FARFIELD_FEASIBILITY_HPP

#include <optional>
#include <string_view>

#include "farfield/geometry.hpp"
#include "farfield/link_budget.hpp"

namespace farfield {

/// Distance range and aperture ratio of a mobile link.
struct MobilityParams {
    double d_min = 1.0;
    double d_max = 1.0;
    double l_coeff = 1.0;

    static MobilityParams from_ratios(double d_min, double m_coeff, double l_coeff);

    [[nodiscard]] double m_coeff() const { return d_max / d_min; }

    /// Throws DomainError unless 0 < d_min <= d_max and L >= 1.
    void validate() const;
};

/// D1^2 + p D1 + q <= 0, obtained by substituting D2 = sqrt(lambda d_min)/2 - D1
/// into the SNR requirement. Real roots, when present, bracket the feasible D1.
struct QuadraticFeasibility {
    struct Roots {
        double x1;
        double x2;
    };

    double p = 0.0;
    double q_coeff = 0.0;
    double discriminant = 0.0;
    std::optional<Roots> roots;

    [[nodiscard]] bool feasible() const { return roots.has_value(); }
};

enum class Infeasibility {
    None,
    ElementNull,
};

std::string_view to_string(Infeasibility reason);

struct FeasibilityOutcome {
    bool feasible = false;
    Infeasibility reason = Infeasibility::None;
    double b_max = 0.0;         // Hz
    double psi = 0.0;           // penalty relative to the stationary bound
    double d1 = 0.0;            // m
    double d2 = 0.0;            // m
    double d_fraunhofer = 0.0;  // m, at (d1, d2)
    RotationState scenario;
};

QuadraticFeasibility stationary_quadratic(double wavelength, double d_min,
                                          const LinkBudgetParams& lb, double bandwidth,
                                          double d_max);

/// G0^2 / (256 pi^2 k T) * Pt / (NF * SNR_th). Independent of distance and wavelength.
double stationary_max_bandwidth(const LinkBudgetParams& lb);

/// sqrt(lambda d) / 4; the equal apertures whose aligned Fraunhofer distance is d.
double stationary_design_aperture(double wavelength, double distance);

/// M^2 F_s^2 / (64 L^2 |f|^2), with F_s the scenario's geometric factor and
/// |f|^2 the product of both sides' element losses. nullopt on an element null.
std::optional<double> penalty(const RotationState& rotation, double l_coeff, double m_coeff,
                              const CosinePattern& pattern);

/// The far-field-feasible bandwidth bound alone (no apertures).
std::optional<double> mobile_bandwidth_bound(const LinkBudgetParams& lb,
                                             const MobilityParams& mob,
                                             const RotationState& rotation);

/// Maximum far-field-feasible bandwidth with the saturating apertures.
FeasibilityOutcome mobile_max_bandwidth(const LinkBudgetParams& lb, const MobilityParams& mob,
                                        const RotationState& rotation, double wavelength);

/// Transmit power (dBm) at which the bandwidth bound equals `bandwidth`.
/// lb.pt_w is ignored. nullopt on an element null.
std::optional<double> required_transmit_power(const LinkBudgetParams& lb,
                                              const MobilityParams& mob,
                                              const RotationState& rotation, double bandwidth);

/// Inverting the bound at its own maximum recovers lb.pt_w within 1e-6 dB.
bool roundtrip_check(const LinkBudgetParams& lb, const MobilityParams& mob,
                     const RotationState& rotation);

}  // namespace farfield

#endif  // FARFIELD_FEASIBILITY_HPP
