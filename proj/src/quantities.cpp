// SPDX-License-Identifier: Apache-2.0

#include "farfield/quantities.hpp"

#include <cmath>

#include <fmt/format.h>

namespace farfield {

namespace detail {

void require_positive(double value, const char* name) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw DomainError(fmt::format("{} must be positive and finite (got {})", name, value));
    }
}

}  // namespace detail

double Decibel::linear() const { return db_to_linear(value_db); }

Decibel Decibel::from_linear(double ratio) { return Decibel{linear_to_db(ratio)}; }

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double ratio) {
    detail::require_positive(ratio, "linear ratio");
    return 10.0 * std::log10(ratio);
}

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double watts_to_dbm(double watts) {
    detail::require_positive(watts, "power");
    return 10.0 * std::log10(watts) + 30.0;
}

double wavelength(double frequency_hz, const PhysicalConstants& constants) {
    detail::require_positive(frequency_hz, "frequency");
    return constants.speed_of_light / frequency_hz;
}

double noise_power(double bandwidth_hz, double noise_figure_db, double temperature_k,
                   const PhysicalConstants& constants) {
    detail::require_positive(bandwidth_hz, "bandwidth");
    detail::require_positive(temperature_k, "temperature");
    return bandwidth_hz * db_to_linear(noise_figure_db) * constants.boltzmann * temperature_k;
}

}  // namespace farfield
