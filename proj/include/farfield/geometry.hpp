// SPDX-License-Identifier: Apache-2.0

#ifndef FARFIELD_GEOMETRY_HPP
#define FARFIELD_GEOMETRY_HPP

#include <string>
#include <string_view>

namespace farfield {

/// Square apertures: AP side d1, UE side d2 (meters), at a given wavelength.
struct ApertureGeometry {
    double d1 = 0.0;
    double d2 = 0.0;
    double wavelength = 0.0;

    /// Builds D1 = L * D2. Requires L >= 1.
    static ApertureGeometry from_ratio(double l_coeff, double d2, double wavelength);

    [[nodiscard]] double ratio() const { return d1 / d2; }

    /// Throws DomainError unless every field is positive.
    void validate() const;
};

enum class Scenario {
    Aligned,
    UeOneAngle,
    UeTwoAngles,
    RelOneAngle,
    RelTwoAngles,
    Composite,
};

std::string_view to_string(Scenario scenario);
/// Accepts the canonical names: aligned, ue-one, ue-two, rel-one, rel-two, composite.
Scenario parse_scenario(std::string_view name);

/// Misalignment configuration. Angles are radians in [0, pi/2]; the
/// constructor takes absolute values of negative inputs and zeroes every
/// angle the scenario does not use.
class RotationState {
public:
    RotationState() = default;
    RotationState(Scenario scenario, double theta_ue, double phi_ue, double theta_rel,
                  double phi_rel);

    static RotationState aligned() { return {}; }
    static RotationState ue_one(double theta_ue);
    static RotationState ue_two(double theta_ue, double phi_ue);
    static RotationState rel_one(double phi_rel);
    static RotationState rel_two(double theta_rel, double phi_rel);
    static RotationState composite(double theta_ue, double phi_ue, double theta_rel,
                                   double phi_rel);

    [[nodiscard]] Scenario scenario() const { return scenario_; }
    [[nodiscard]] double theta_ue() const { return theta_ue_; }
    [[nodiscard]] double phi_ue() const { return phi_ue_; }
    [[nodiscard]] double theta_rel() const { return theta_rel_; }
    [[nodiscard]] double phi_rel() const { return phi_rel_; }

    friend bool operator==(const RotationState&, const RotationState&) = default;

private:
    Scenario scenario_ = Scenario::Aligned;
    double theta_ue_ = 0.0;
    double phi_ue_ = 0.0;
    double theta_rel_ = 0.0;
    double phi_rel_ = 0.0;
};

// Fraunhofer (near-field boundary) distances in meters.
double fraunhofer_aligned(const ApertureGeometry& g);
double fraunhofer_ue_one(const ApertureGeometry& g, double theta_ue);
double fraunhofer_ue_two(const ApertureGeometry& g, double theta_ue, double phi_ue);
double fraunhofer_rel_one(const ApertureGeometry& g, double phi_rel);
double fraunhofer_rel_two(const ApertureGeometry& g, double theta_rel, double phi_rel);

/// Boundary for any scenario. Composite is max(ue_two, rel_two).
double fraunhofer(const ApertureGeometry& g, const RotationState& rotation);

/// F(L, theta, phi) = (L + cos t)^2 + (L + cos p + |sin t sin p|)^2.
double geom_factor_ue(double l_coeff, double theta_ue, double phi_ue);
/// F_AP(L, theta, phi) = (L cos t + 1)^2 + (L (cos p + |sin t sin p|) + 1)^2.
double geom_factor_ap(double l_coeff, double theta_rel, double phi_rel);

/// The factor F_s with d_F = 2 * D2^2 * F_s / lambda when D1 = L * D2.
/// Aligned gives 2 (L+1)^2; Composite gives max(F, F_AP).
double scenario_geom_factor(double l_coeff, const RotationState& rotation);

/// Half-wavelength element count per side, round(2 D / lambda), at least 1.
int element_count(double aperture, double wavelength);

}  // namespace farfield

#endif  // FARFIELD_GEOMETRY_HPP
