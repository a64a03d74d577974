// SPDX-License-Identifier: Apache-2.0

#ifndef FARFIELD_PARAMETERS_HPP
#define FARFIELD_PARAMETERS_HPP

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "farfield/feasibility.hpp"
#include "farfield/geometry.hpp"
#include "farfield/link_budget.hpp"

namespace farfield {

/// Malformed sweep specification, preset name or configuration key.
class SpecError : public std::invalid_argument {
public:
    explicit SpecError(const std::string& what) : std::invalid_argument(what) {}
};

enum class ConstantsPreset { Codata, Paper };

/// Flat parameter bundle addressed by the same keys as the CLI config.
/// Angles are in degrees here and converted to radians once, in rotation().
///
/// Two virtual keys exist besides the stored fields: m_coeff sets
/// d_max = M * d_min, distance_m sets d_min = d_max = d.
struct ParameterSet {
    double pt_dbm = 23.0;
    double snr_db = 30.0;
    double nf_db = 10.0;
    double temp_k = 290.0;
    double q = 1.0;
    double freq_hz = 300e9;
    double d_min_m = 0.5;
    double d_max_m = 0.5;
    double l_coeff = 1.0;
    Scenario scenario = Scenario::Aligned;
    double theta_ue_deg = 0.0;
    double phi_ue_deg = 0.0;
    double theta_rel_deg = 0.0;
    double phi_rel_deg = 0.0;
    double bandwidth_hz = 1e9;
    ConstantsPreset constants = ConstantsPreset::Codata;

    /// Numeric keys only; throws SpecError on unknown or non-numeric keys.
    void set(std::string_view key, double value);
    /// Any key, value given as text (numbers, scenario names, codata|paper).
    void set_text(std::string_view key, std::string_view value);
    [[nodiscard]] double get(std::string_view key) const;

    [[nodiscard]] PhysicalConstants physical_constants() const;
    [[nodiscard]] LinkBudgetParams link_budget() const;
    [[nodiscard]] MobilityParams mobility() const;
    [[nodiscard]] RotationState rotation() const;
    [[nodiscard]] double wavelength() const;

    friend bool operator==(const ParameterSet&, const ParameterSet&) = default;
};

/// Every key accepted by ParameterSet::set_text, in documentation order.
std::span<const std::string_view> parameter_keys();
bool is_numeric_key(std::string_view key);
/// Stored fields a key writes; m_coeff writes d_max_m, distance_m writes both distances.
std::vector<std::string_view> touched_fields(std::string_view key);

std::string_view to_string(ConstantsPreset preset);

}  // namespace farfield

#endif  // FARFIELD_PARAMETERS_HPP
