// SPDX-License-Identifier: Apache-2.0

#ifndef FARFIELD_ELEMENT_PATTERN_HPP
#define FARFIELD_ELEMENT_PATTERN_HPP

namespace farfield {

/// Symmetric cosine-order element: f(theta, phi) = cos^q(theta) * cos^q(phi).
///
/// Angles are restricted to the front hemisphere [-pi/2, pi/2]. At exactly
/// +-pi/2 the field is zero for q > 0 (an element null).
class CosinePattern {
public:
    explicit CosinePattern(double order = 1.0);

    [[nodiscard]] double order() const { return order_; }

    /// Field amplitude, 1 at boresight.
    [[nodiscard]] double field(double theta, double phi) const;

    /// Normalized power pattern |f|^2.
    [[nodiscard]] double power(double theta, double phi) const;

    /// G0 = 4q + 2.
    [[nodiscard]] double normalization_constant() const;

    friend bool operator==(const CosinePattern&, const CosinePattern&) = default;

private:
    double order_;
};

double normalization_constant(double order);

/// Inverse of (1/4pi) * integral |f|^2 dOmega with dOmega = cos(phi) dtheta dphi,
/// evaluated by composite Simpson on the two separable 1-D integrals.
double normalization_by_quadrature(double order, int panels);

}  // namespace farfield

#endif  // FARFIELD_ELEMENT_PATTERN_HPP
