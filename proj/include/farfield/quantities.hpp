// SPDX-License-Identifier: Apache-2.0

#ifndef FARFIELD_QUANTITIES_HPP
#define FARFIELD_QUANTITIES_HPP

#include <stdexcept>
#include <string>

namespace farfield {

/// Raised when an input lies outside the domain of a physical formula.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Physical constants used by every formula. Two presets exist: CODATA values
/// and the rounded values used when reproducing published figures.
struct PhysicalConstants {
    double boltzmann = 1.380649e-23;     // J/K
    double speed_of_light = 2.99792458e8;  // m/s

    static constexpr PhysicalConstants codata() { return {}; }
    static constexpr PhysicalConstants paper() { return {1.38e-23, 3.0e8}; }
};

/// Ratio expressed in decibels.
struct Decibel {
    double value_db = 0.0;

    [[nodiscard]] double linear() const;
    static Decibel from_linear(double ratio);
};

double db_to_linear(double db);
double linear_to_db(double ratio);
double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);

/// Carrier wavelength c/f.
double wavelength(double frequency_hz,
                  const PhysicalConstants& constants = PhysicalConstants::codata());

/// Thermal noise power B * NF * k * T in watts.
double noise_power(double bandwidth_hz, double noise_figure_db, double temperature_k,
                   const PhysicalConstants& constants = PhysicalConstants::codata());

namespace detail {

void require_positive(double value, const char* name);

}  // namespace detail

}  // namespace farfield

#endif  // FARFIELD_QUANTITIES_HPP
