// SPDX-License-Identifier: Apache-2.0

#include "farfield/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <utility>

#include <fmt/format.h>

#include "farfield/quantities.hpp"

namespace farfield {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kAngleSlack = 1e-12;

double checked_angle(double angle, const char* name) {
    const double a = std::abs(angle);
    if (!std::isfinite(angle) || a > kHalfPi + kAngleSlack) {
        throw DomainError(fmt::format("{} = {} rad outside [0, pi/2]", name, angle));
    }
    return std::min(a, kHalfPi);
}

// cos that returns exactly 0 at pi/2.
double cos0(double angle) { return angle >= kHalfPi ? 0.0 : std::cos(angle); }

void require_ratio(double l_coeff) {
    if (!(l_coeff >= 1.0) || !std::isfinite(l_coeff)) {
        throw DomainError(fmt::format("aperture ratio L must be >= 1 (got {})", l_coeff));
    }
}

constexpr std::array<std::pair<Scenario, std::string_view>, 6> kScenarioNames{{
    {Scenario::Aligned, "aligned"},
    {Scenario::UeOneAngle, "ue-one"},
    {Scenario::UeTwoAngles, "ue-two"},
    {Scenario::RelOneAngle, "rel-one"},
    {Scenario::RelTwoAngles, "rel-two"},
    {Scenario::Composite, "composite"},
}};

}  // namespace

ApertureGeometry ApertureGeometry::from_ratio(double l_coeff, double d2, double wavelength) {
    require_ratio(l_coeff);
    ApertureGeometry g{l_coeff * d2, d2, wavelength};
    g.validate();
    return g;
}

void ApertureGeometry::validate() const {
    detail::require_positive(d1, "AP aperture D1");
    detail::require_positive(d2, "UE aperture D2");
    detail::require_positive(wavelength, "wavelength");
}

std::string_view to_string(Scenario scenario) {
    for (const auto& [s, name] : kScenarioNames) {
        if (s == scenario) return name;
    }
    return "unknown";
}

Scenario parse_scenario(std::string_view name) {
    for (const auto& [s, canonical] : kScenarioNames) {
        if (canonical == name) return s;
    }
    throw DomainError(fmt::format("unknown scenario '{}'", name));
}

RotationState::RotationState(Scenario scenario, double theta_ue, double phi_ue, double theta_rel,
                             double phi_rel)
    : scenario_(scenario),
      theta_ue_(checked_angle(theta_ue, "theta_ue")),
      phi_ue_(checked_angle(phi_ue, "phi_ue")),
      theta_rel_(checked_angle(theta_rel, "theta_rel")),
      phi_rel_(checked_angle(phi_rel, "phi_rel")) {
    switch (scenario_) {
        case Scenario::Aligned:
            theta_ue_ = phi_ue_ = theta_rel_ = phi_rel_ = 0.0;
            break;
        case Scenario::UeOneAngle:
            phi_ue_ = theta_rel_ = phi_rel_ = 0.0;
            break;
        case Scenario::UeTwoAngles:
            theta_rel_ = phi_rel_ = 0.0;
            break;
        case Scenario::RelOneAngle:
            theta_ue_ = phi_ue_ = theta_rel_ = 0.0;
            break;
        case Scenario::RelTwoAngles:
            theta_ue_ = phi_ue_ = 0.0;
            break;
        case Scenario::Composite:
            break;
    }
}

RotationState RotationState::ue_one(double theta_ue) {
    return {Scenario::UeOneAngle, theta_ue, 0.0, 0.0, 0.0};
}

RotationState RotationState::ue_two(double theta_ue, double phi_ue) {
    return {Scenario::UeTwoAngles, theta_ue, phi_ue, 0.0, 0.0};
}

RotationState RotationState::rel_one(double phi_rel) {
    return {Scenario::RelOneAngle, 0.0, 0.0, 0.0, phi_rel};
}

RotationState RotationState::rel_two(double theta_rel, double phi_rel) {
    return {Scenario::RelTwoAngles, 0.0, 0.0, theta_rel, phi_rel};
}

RotationState RotationState::composite(double theta_ue, double phi_ue, double theta_rel,
                                       double phi_rel) {
    return {Scenario::Composite, theta_ue, phi_ue, theta_rel, phi_rel};
}

double fraunhofer_aligned(const ApertureGeometry& g) {
    g.validate();
    const double sum = g.d1 + g.d2;
    return 4.0 * sum * sum / g.wavelength;
}

double fraunhofer_ue_one(const ApertureGeometry& g, double theta_ue) {
    g.validate();
    const double t = checked_angle(theta_ue, "theta_ue");
    const double a = g.d1 + g.d2;
    const double b = g.d1 + g.d2 * cos0(t);
    return 2.0 * (a * a + b * b) / g.wavelength;
}

double fraunhofer_ue_two(const ApertureGeometry& g, double theta_ue, double phi_ue) {
    g.validate();
    const double t = checked_angle(theta_ue, "theta_ue");
    const double p = checked_angle(phi_ue, "phi_ue");
    const double a = g.d1 + g.d2 * cos0(t);
    const double b = g.d1 + g.d2 * (cos0(p) + std::abs(std::sin(t) * std::sin(p)));
    return 2.0 * (a * a + b * b) / g.wavelength;
}

double fraunhofer_rel_one(const ApertureGeometry& g, double phi_rel) {
    g.validate();
    const double p = checked_angle(phi_rel, "phi_rel");
    const double a = g.d1 + g.d2;
    const double b = g.d1 * cos0(p) + g.d2;
    return 2.0 * (a * a + b * b) / g.wavelength;
}

double fraunhofer_rel_two(const ApertureGeometry& g, double theta_rel, double phi_rel) {
    g.validate();
    const double t = checked_angle(theta_rel, "theta_rel");
    const double p = checked_angle(phi_rel, "phi_rel");
    const double a = g.d1 * cos0(t) + g.d2;
    const double b = g.d1 * (cos0(p) + std::abs(std::sin(t) * std::sin(p))) + g.d2;
    return 2.0 * (a * a + b * b) / g.wavelength;
}

double fraunhofer(const ApertureGeometry& g, const RotationState& rotation) {
    switch (rotation.scenario()) {
        case Scenario::Aligned:
            return fraunhofer_aligned(g);
        case Scenario::UeOneAngle:
            return fraunhofer_ue_one(g, rotation.theta_ue());
        case Scenario::UeTwoAngles:
            return fraunhofer_ue_two(g, rotation.theta_ue(), rotation.phi_ue());
        case Scenario::RelOneAngle:
            return fraunhofer_rel_one(g, rotation.phi_rel());
        case Scenario::RelTwoAngles:
            return fraunhofer_rel_two(g, rotation.theta_rel(), rotation.phi_rel());
        case Scenario::Composite:
            return std::max(fraunhofer_ue_two(g, rotation.theta_ue(), rotation.phi_ue()),
                            fraunhofer_rel_two(g, rotation.theta_rel(), rotation.phi_rel()));
    }
    throw DomainError("unhandled scenario");
}

double geom_factor_ue(double l_coeff, double theta_ue, double phi_ue) {
    require_ratio(l_coeff);
    const double t = checked_angle(theta_ue, "theta_ue");
    const double p = checked_angle(phi_ue, "phi_ue");
    const double a = l_coeff + cos0(t);
    const double b = l_coeff + cos0(p) + std::abs(std::sin(t) * std::sin(p));
    return a * a + b * b;
}

double geom_factor_ap(double l_coeff, double theta_rel, double phi_rel) {
    require_ratio(l_coeff);
    const double t = checked_angle(theta_rel, "theta_rel");
    const double p = checked_angle(phi_rel, "phi_rel");
    const double a = l_coeff * cos0(t) + 1.0;
    const double b = l_coeff * (cos0(p) + std::abs(std::sin(t) * std::sin(p))) + 1.0;
    return a * a + b * b;
}

double scenario_geom_factor(double l_coeff, const RotationState& rotation) {
    switch (rotation.scenario()) {
        case Scenario::Aligned: {
            require_ratio(l_coeff);
            return 2.0 * (l_coeff + 1.0) * (l_coeff + 1.0);
        }
        case Scenario::UeOneAngle:
        case Scenario::UeTwoAngles:
            return geom_factor_ue(l_coeff, rotation.theta_ue(), rotation.phi_ue());
        case Scenario::RelOneAngle:
        case Scenario::RelTwoAngles:
            return geom_factor_ap(l_coeff, rotation.theta_rel(), rotation.phi_rel());
        case Scenario::Composite:
            return std::max(geom_factor_ue(l_coeff, rotation.theta_ue(), rotation.phi_ue()),
                            geom_factor_ap(l_coeff, rotation.theta_rel(), rotation.phi_rel()));
    }
    throw DomainError("unhandled scenario");
}

int element_count(double aperture, double wavelength) {
    detail::require_positive(aperture, "aperture");
    detail::require_positive(wavelength, "wavelength");
    return std::max(1, static_cast<int>(std::lround(2.0 * aperture / wavelength)));
}

}  // namespace farfield
