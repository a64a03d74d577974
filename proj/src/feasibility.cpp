// SPDX-License-Identifier: Apache-2.0

#include "farfield/feasibility.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/format.h>

namespace farfield {

namespace {

constexpr double kPi = std::numbers::pi;
// |disc| <= kDiscriminantTie * (p/2)^2 counts as a double root.
constexpr double kDiscriminantTie = 1e-12;
constexpr double kRoundtripTolDb = 1e-6;

}  // namespace

MobilityParams MobilityParams::from_ratios(double d_min, double m_coeff, double l_coeff) {
    MobilityParams mob{d_min, d_min * m_coeff, l_coeff};
    mob.validate();
    return mob;
}

void MobilityParams::validate() const {
    detail::require_positive(d_min, "d_min");
    detail::require_positive(d_max, "d_max");
    if (d_max < d_min) {
        throw DomainError(fmt::format("d_max ({}) must not be below d_min ({})", d_max, d_min));
    }
    if (!(l_coeff >= 1.0) || !std::isfinite(l_coeff)) {
        throw DomainError(fmt::format("aperture ratio L must be >= 1 (got {})", l_coeff));
    }
}

std::string_view to_string(Infeasibility reason) {
    switch (reason) {
        case Infeasibility::None:
            return "none";
        case Infeasibility::ElementNull:
            return "element null";
    }
    return "unknown";
}

QuadraticFeasibility stationary_quadratic(double wavelength, double d_min,
                                          const LinkBudgetParams& lb, double bandwidth,
                                          double d_max) {
    detail::require_positive(d_min, "d_min");
    if (!(d_max >= d_min)) {
        throw DomainError(fmt::format("d_max ({}) must not be below d_min ({})", d_max, d_min));
    }
    QuadraticFeasibility quad;
    quad.p = -std::sqrt(wavelength * d_min) / 2.0;
    quad.q_coeff = *aperture_product_requirement(lb, wavelength, d_max, bandwidth, 1.0);

    const double half_p_sq = (quad.p / 2.0) * (quad.p / 2.0);
    quad.discriminant = half_p_sq - quad.q_coeff;
    const double centre = -quad.p / 2.0;
    if (std::abs(quad.discriminant) <= kDiscriminantTie * half_p_sq) {
        quad.roots = QuadraticFeasibility::Roots{centre, centre};
    } else if (quad.discriminant > 0.0) {
        const double spread = std::sqrt(quad.discriminant);
        quad.roots = QuadraticFeasibility::Roots{centre - spread, centre + spread};
    }
    return quad;
}

double stationary_max_bandwidth(const LinkBudgetParams& lb) {
    lb.validate();
    const double g0 = lb.pattern.normalization_constant();
    const double kt = lb.constants.boltzmann * lb.temperature_k;
    return g0 * g0 / (256.0 * kPi * kPi * kt) * lb.pt_w /
           (lb.noise_factor() * lb.snr_threshold_linear());
}

double stationary_design_aperture(double wavelength, double distance) {
    detail::require_positive(wavelength, "wavelength");
    detail::require_positive(distance, "distance");
    return std::sqrt(wavelength * distance) / 4.0;
}

std::optional<double> penalty(const RotationState& rotation, double l_coeff, double m_coeff,
                              const CosinePattern& pattern) {
    if (!(m_coeff >= 1.0) || !std::isfinite(m_coeff)) {
        throw DomainError(fmt::format("mobility coefficient M must be >= 1 (got {})", m_coeff));
    }
    const double f = scenario_geom_factor(l_coeff, rotation);
    const double loss = element_loss(pattern, rotation).combined();
    if (loss <= 0.0) return std::nullopt;
    return m_coeff * m_coeff * f * f / (64.0 * l_coeff * l_coeff * loss);
}

std::optional<double> mobile_bandwidth_bound(const LinkBudgetParams& lb,
                                             const MobilityParams& mob,
                                             const RotationState& rotation) {
    mob.validate();
    const auto psi = penalty(rotation, mob.l_coeff, mob.m_coeff(), lb.pattern);
    if (!psi) return std::nullopt;
    return stationary_max_bandwidth(lb) / *psi;
}

FeasibilityOutcome mobile_max_bandwidth(const LinkBudgetParams& lb, const MobilityParams& mob,
                                        const RotationState& rotation, double wavelength) {
    mob.validate();
    detail::require_positive(wavelength, "wavelength");

    FeasibilityOutcome out;
    out.scenario = rotation;
    // Largest D2 with the scenario boundary at d_min: 2 D2^2 F_s / lambda = d_min.
    const double f = scenario_geom_factor(mob.l_coeff, rotation);
    out.d2 = std::sqrt(wavelength * mob.d_min / (2.0 * f));
    out.d1 = mob.l_coeff * out.d2;
    out.d_fraunhofer = fraunhofer(ApertureGeometry{out.d1, out.d2, wavelength}, rotation);

    const auto psi = penalty(rotation, mob.l_coeff, mob.m_coeff(), lb.pattern);
    if (!psi) {
        out.reason = Infeasibility::ElementNull;
        out.psi = std::numeric_limits<double>::infinity();
        return out;
    }
    out.feasible = true;
    out.psi = *psi;
    out.b_max = stationary_max_bandwidth(lb) / *psi;
    return out;
}

std::optional<double> required_transmit_power(const LinkBudgetParams& lb,
                                              const MobilityParams& mob,
                                              const RotationState& rotation, double bandwidth) {
    mob.validate();
    detail::require_positive(bandwidth, "bandwidth");
    LinkBudgetParams unit = lb;
    unit.pt_w = 1.0;
    unit.validate();
    const auto psi = penalty(rotation, mob.l_coeff, mob.m_coeff(), lb.pattern);
    if (!psi) return std::nullopt;
    // The bound is linear in Pt; invert it exactly, G0 term included.
    const double g0 = lb.pattern.normalization_constant();
    const double kt = lb.constants.boltzmann * lb.temperature_k;
    return 10.0 * std::log10(256.0 * kPi * kPi) + 30.0 + lb.snr_th_db + lb.nf_db +
           10.0 * std::log10(kt) + 10.0 * std::log10(bandwidth) + 10.0 * std::log10(*psi) -
           20.0 * std::log10(g0);
}

bool roundtrip_check(const LinkBudgetParams& lb, const MobilityParams& mob,
                     const RotationState& rotation) {
    const auto b_max = mobile_bandwidth_bound(lb, mob, rotation);
    if (!b_max) return false;
    const auto pt_dbm = required_transmit_power(lb, mob, rotation, *b_max);
    return pt_dbm && std::abs(*pt_dbm - watts_to_dbm(lb.pt_w)) <= kRoundtripTolDb;
}

}  // namespace farfield
