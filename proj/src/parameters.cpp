// SPDX-License-Identifier: Apache-2.0

#include "farfield/parameters.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <numbers>

#include <fmt/format.h>

namespace farfield {

namespace {

constexpr double kDegree = std::numbers::pi / 180.0;

constexpr std::array<std::string_view, 18> kKeys{
    "pt_dbm",       "snr_db",     "nf_db",        "temp_k",        "q",
    "freq_hz",      "d_min_m",    "d_max_m",      "m_coeff",       "distance_m",
    "l_coeff",      "scenario",   "theta_ue_deg", "phi_ue_deg",    "theta_rel_deg",
    "phi_rel_deg",  "bandwidth_hz", "constants",
};

template <typename Params>
auto* numeric_field(Params& p, std::string_view key) {
    if (key == "pt_dbm") return &p.pt_dbm;
    if (key == "snr_db") return &p.snr_db;
    if (key == "nf_db") return &p.nf_db;
    if (key == "temp_k") return &p.temp_k;
    if (key == "q") return &p.q;
    if (key == "freq_hz") return &p.freq_hz;
    if (key == "d_min_m") return &p.d_min_m;
    if (key == "d_max_m") return &p.d_max_m;
    if (key == "l_coeff") return &p.l_coeff;
    if (key == "theta_ue_deg") return &p.theta_ue_deg;
    if (key == "phi_ue_deg") return &p.phi_ue_deg;
    if (key == "theta_rel_deg") return &p.theta_rel_deg;
    if (key == "phi_rel_deg") return &p.phi_rel_deg;
    if (key == "bandwidth_hz") return &p.bandwidth_hz;
    return static_cast<decltype(&p.pt_dbm)>(nullptr);
}

double parse_number(std::string_view key, std::string_view text) {
    double value = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw SpecError(fmt::format("value '{}' for '{}' is not a number", text, key));
    }
    return value;
}

}  // namespace

std::span<const std::string_view> parameter_keys() { return kKeys; }

bool is_numeric_key(std::string_view key) {
    return key != "scenario" && key != "constants" &&
           std::ranges::find(kKeys, key) != kKeys.end();
}

std::vector<std::string_view> touched_fields(std::string_view key) {
    if (key == "m_coeff") return {"d_max_m"};
    if (key == "distance_m") return {"d_min_m", "d_max_m"};
    return {key};
}

std::string_view to_string(ConstantsPreset preset) {
    return preset == ConstantsPreset::Paper ? "paper" : "codata";
}

void ParameterSet::set(std::string_view key, double value) {
    if (key == "m_coeff") {
        d_max_m = value * d_min_m;
    } else if (key == "distance_m") {
        d_min_m = d_max_m = value;
    } else if (double* field = numeric_field(*this, key)) {
        *field = value;
    } else if (key == "scenario" || key == "constants") {
        throw SpecError(fmt::format("'{}' takes a name, not a number", key));
    } else {
        throw SpecError(fmt::format("unknown parameter '{}'", key));
    }
}

void ParameterSet::set_text(std::string_view key, std::string_view value) {
    if (key == "scenario") {
        try {
            scenario = parse_scenario(value);
        } catch (const DomainError& e) {
            throw SpecError(e.what());
        }
    } else if (key == "constants") {
        if (value == "codata") {
            constants = ConstantsPreset::Codata;
        } else if (value == "paper") {
            constants = ConstantsPreset::Paper;
        } else {
            throw SpecError(fmt::format("constants must be 'codata' or 'paper' (got '{}')", value));
        }
    } else if (!is_numeric_key(key)) {
        throw SpecError(fmt::format("unknown parameter '{}'", key));
    } else {
        set(key, parse_number(key, value));
    }
}

double ParameterSet::get(std::string_view key) const {
    if (key == "m_coeff") return d_max_m / d_min_m;
    if (key == "distance_m") return d_min_m;
    if (const double* field = numeric_field(*this, key)) return *field;
    throw SpecError(fmt::format("unknown numeric parameter '{}'", key));
}

PhysicalConstants ParameterSet::physical_constants() const {
    return constants == ConstantsPreset::Paper ? PhysicalConstants::paper()
                                               : PhysicalConstants::codata();
}

LinkBudgetParams ParameterSet::link_budget() const {
    LinkBudgetParams lb;
    lb.pt_w = dbm_to_watts(pt_dbm);
    lb.nf_db = nf_db;
    lb.temperature_k = temp_k;
    lb.snr_th_db = snr_db;
    lb.pattern = CosinePattern(q);
    lb.constants = physical_constants();
    lb.validate();
    return lb;
}

MobilityParams ParameterSet::mobility() const {
    MobilityParams mob{d_min_m, d_max_m, l_coeff};
    mob.validate();
    return mob;
}

RotationState ParameterSet::rotation() const {
    return {scenario, theta_ue_deg * kDegree, phi_ue_deg * kDegree, theta_rel_deg * kDegree,
            phi_rel_deg * kDegree};
}

double ParameterSet::wavelength() const {
    return farfield::wavelength(freq_hz, physical_constants());
}

}  // namespace farfield
