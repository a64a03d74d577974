// SPDX-License-Identifier: Apache-2.0

#include "farfield/element_pattern.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "farfield/quantities.hpp"

namespace farfield {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
// Slack for angles that went through a degree conversion.
constexpr double kAngleSlack = 1e-12;

double front_cosine(double angle) {
    if (!std::isfinite(angle) || std::abs(angle) > kHalfPi + kAngleSlack) {
        throw DomainError(fmt::format("element angle {} rad outside [-pi/2, pi/2]", angle));
    }
    if (std::abs(angle) >= kHalfPi - kAngleSlack) return 0.0;
    return std::cos(angle);
}

void require_order(double order) {
    if (!(order >= 0.0) || !std::isfinite(order)) {
        throw DomainError(fmt::format("pattern order q must be non-negative (got {})", order));
    }
}

template <typename F>
double simpson(F&& integrand, double lo, double hi, int panels) {
    const double h = (hi - lo) / panels;
    double sum = integrand(lo) + integrand(hi);
    for (int i = 1; i < panels; ++i) {
        sum += (i % 2 == 1 ? 4.0 : 2.0) * integrand(lo + i * h);
    }
    return sum * h / 3.0;
}

}  // namespace

CosinePattern::CosinePattern(double order) : order_(order) { require_order(order); }

double CosinePattern::field(double theta, double phi) const {
    const double ct = front_cosine(theta);
    const double cp = front_cosine(phi);
    if (order_ == 0.0) return 1.0;
    return std::pow(ct, order_) * std::pow(cp, order_);
}

double CosinePattern::power(double theta, double phi) const {
    const double f = field(theta, phi);
    return f * f;
}

double CosinePattern::normalization_constant() const {
    return farfield::normalization_constant(order_);
}

double normalization_constant(double order) {
    require_order(order);
    return 4.0 * order + 2.0;
}

double normalization_by_quadrature(double order, int panels) {
    require_order(order);
    if (panels < 8 || panels % 2 != 0) {
        throw DomainError(fmt::format("Simpson panel count must be even and >= 8 (got {})", panels));
    }
    const auto cos_power = [](double exponent) {
        return [exponent](double x) {
            const double c = std::max(0.0, std::cos(x));
            return exponent == 0.0 ? 1.0 : std::pow(c, exponent);
        };
    };
    const double theta_integral = simpson(cos_power(2.0 * order), -kHalfPi, kHalfPi, panels);
    const double phi_integral = simpson(cos_power(2.0 * order + 1.0), -kHalfPi, kHalfPi, panels);
    return 4.0 * std::numbers::pi / (theta_integral * phi_integral);
}

}  // namespace farfield
