// SPDX-License-Identifier: Apache-2.0

#include "farfield/sweep.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <iterator>

#include <fmt/format.h>

#include "farfield/feasibility.hpp"
#include "farfield/link_budget.hpp"

namespace farfield::sweep {

namespace {

struct OutputInfo {
    Output output;
    std::string_view name;
    std::string_view column;
    std::string_view label;
    Spacing scale;
};

constexpr std::array<OutputInfo, 7> kOutputs{{
    {Output::BMax, "b_max", "b_max_hz", "Maximum far-field bandwidth (Hz)", Spacing::Log},
    {Output::RequiredPtDbm, "required_pt_dbm", "required_pt_dbm", "Required transmit power (dBm)",
     Spacing::Linear},
    {Output::D1, "d1", "d1_m", "AP aperture D1 (m)", Spacing::Log},
    {Output::D2, "d2", "d2_m", "UE aperture D2 (m)", Spacing::Log},
    {Output::DFraunhofer, "d_fraunhofer", "d_fraunhofer_m", "Fraunhofer distance (m)",
     Spacing::Log},
    {Output::PsiDb, "psi_db", "psi_db", "Bandwidth penalty (dB)", Spacing::Linear},
    {Output::RequiredPsd, "required_psd", "required_psd_dbm_hz", "Required PSD (dBm/Hz)",
     Spacing::Linear},
}};

const OutputInfo& info(Output output) {
    for (const auto& entry : kOutputs) {
        if (entry.output == output) return entry;
    }
    throw SpecError("unknown output");
}

std::string_view axis_label(std::string_view key) {
    if (key == "pt_dbm") return "Transmit power (dBm)";
    if (key == "snr_db") return "SNR threshold (dB)";
    if (key == "nf_db") return "Noise figure (dB)";
    if (key == "freq_hz") return "Carrier frequency (Hz)";
    if (key == "distance_m") return "Link distance (m)";
    if (key == "m_coeff") return "Mobility coefficient M";
    if (key == "l_coeff") return "Aperture ratio L";
    if (key == "bandwidth_hz") return "Target bandwidth (Hz)";
    return key;
}

std::string number(double v) { return fmt::format("{:.8e}", v); }

std::optional<double> evaluate(const ParameterSet& params, Output output,
                               const FeasibilityOutcome& outcome) {
    switch (output) {
        case Output::BMax:
            return outcome.b_max;
        case Output::RequiredPtDbm:
            return required_transmit_power(params.link_budget(), params.mobility(),
                                           params.rotation(), params.bandwidth_hz);
        case Output::D1:
            return outcome.d1;
        case Output::D2:
            return outcome.d2;
        case Output::DFraunhofer:
            return outcome.d_fraunhofer;
        case Output::PsiDb:
            return linear_to_db(outcome.psi);
        case Output::RequiredPsd:
            return required_psd(params.link_budget());
    }
    return std::nullopt;
}

void write_file(const std::filesystem::path& destination, const std::string& contents) {
    std::ofstream out(destination, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError(fmt::format("cannot open '{}' for writing", destination.string()));
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw IoError(fmt::format("failed writing '{}'", destination.string()));
}

Axis linear(std::string name, double lo, double hi, int points) {
    return {std::move(name), lo, hi, points, Spacing::Linear};
}

Axis logarithmic(std::string name, double lo, double hi, int points) {
    return {std::move(name), lo, hi, points, Spacing::Log};
}

Series series(std::initializer_list<std::pair<std::string, double>> overrides) {
    return Series{std::vector<std::pair<std::string, double>>(overrides)};
}

ParameterSet reference_defaults() {
    ParameterSet p;
    p.constants = ConstantsPreset::Paper;
    p.pt_dbm = 23.0;
    p.snr_db = 30.0;
    p.nf_db = 10.0;
    p.temp_k = 290.0;
    p.q = 1.0;
    p.freq_hz = 300e9;
    return p;
}

// Stationary link: L = 1, M = 1, aligned; the mobile bound reduces to the
// stationary one and d1 = d2 = sqrt(lambda d) / 4.
ParameterSet stationary_base() {
    ParameterSet p = reference_defaults();
    p.d_min_m = p.d_max_m = 200.0;
    return p;
}

SweepSpec mobility_preset(std::string name, Scenario scenario, bool versus_m) {
    SweepSpec spec;
    spec.name = std::move(name);
    spec.base = reference_defaults();
    spec.base.scenario = scenario;
    spec.base.d_min_m = 0.5;
    spec.base.d_max_m = 25.0;
    const bool ue = scenario == Scenario::UeTwoAngles;
    const std::string theta = ue ? "theta_ue_deg" : "theta_rel_deg";
    const std::string phi = ue ? "phi_ue_deg" : "phi_rel_deg";
    if (versus_m) {
        spec.axes = {linear("m_coeff", 1.0, 100.0, 100)};
        for (double l : {1.0, 20.0, 30.0}) {
            for (double angle : {0.0, 45.0}) {
                spec.series.push_back(series({{"l_coeff", l}, {theta, angle}, {phi, angle}}));
            }
        }
    } else {
        spec.axes = {linear("l_coeff", 1.0, 40.0, 40)};
        for (double m : {1.0, 10.0, 50.0}) {
            for (double angle : {0.0, 45.0}) {
                spec.series.push_back(series({{"m_coeff", m}, {theta, angle}, {phi, angle}}));
            }
        }
    }
    spec.outputs = {Output::BMax, Output::D1, Output::D2, Output::PsiDb};
    return spec;
}

// Required UE power against target bandwidth: SNR 20 dB, 0.5 m to 25 m.
// Rotated curves use the four-tuple (45, 45, 45, 45) degrees.
SweepSpec power_preset(std::string name, double freq_hz, double b_lo, double b_hi) {
    SweepSpec spec;
    spec.name = std::move(name);
    spec.base = reference_defaults();
    spec.base.freq_hz = freq_hz;
    spec.base.snr_db = 20.0;
    spec.base.scenario = Scenario::Composite;
    spec.base.d_min_m = 0.5;
    spec.base.d_max_m = 25.0;
    spec.axes = {logarithmic("bandwidth_hz", b_lo, b_hi, 21)};
    for (double angle : {0.0, 45.0}) {
        for (double l : {20.0, 30.0}) {
            spec.series.push_back(series({{"l_coeff", l},
                                          {"m_coeff", 50.0},
                                          {"theta_ue_deg", angle},
                                          {"phi_ue_deg", angle},
                                          {"theta_rel_deg", angle},
                                          {"phi_rel_deg", angle}}));
        }
    }
    spec.series.push_back(series({{"l_coeff", 1.0},
                                  {"m_coeff", 1.0},
                                  {"theta_ue_deg", 0.0},
                                  {"phi_ue_deg", 0.0},
                                  {"theta_rel_deg", 0.0},
                                  {"phi_rel_deg", 0.0}}));
    spec.outputs = {Output::RequiredPtDbm};
    return spec;
}

}  // namespace

std::vector<double> Axis::values() const {
    std::vector<double> out(static_cast<std::size_t>(std::max(points, 0)));
    if (points < 2) return out;
    for (int i = 0; i < points; ++i) {
        const double t = static_cast<double>(i) / (points - 1);
        if (spacing == Spacing::Linear) {
            out[i] = min + (max - min) * t;
        } else {
            out[i] = std::pow(10.0, std::log10(min) + (std::log10(max) - std::log10(min)) * t);
        }
    }
    out.front() = min;
    out.back() = max;
    return out;
}

std::string_view to_string(Output output) { return info(output).name; }

std::string_view column_name(Output output) { return info(output).column; }

Output parse_output(std::string_view name) {
    for (const auto& entry : kOutputs) {
        if (entry.name == name || entry.column == name) return entry.output;
    }
    throw SpecError(fmt::format("unknown output '{}'", name));
}

void SweepSpec::validate() const {
    if (axes.empty() || axes.size() > 2) {
        throw SpecError(fmt::format("a sweep needs 1 or 2 axes (got {})", axes.size()));
    }
    std::vector<std::string_view> swept;
    for (const auto& axis : axes) {
        if (!is_numeric_key(axis.name)) {
            throw SpecError(fmt::format("unknown sweep axis '{}'", axis.name));
        }
        if (axis.points < 2) {
            throw SpecError(fmt::format("axis '{}' needs at least 2 points", axis.name));
        }
        if (!std::isfinite(axis.min) || !std::isfinite(axis.max)) {
            throw SpecError(fmt::format("axis '{}' has non-finite bounds", axis.name));
        }
        if (axis.spacing == Spacing::Log && !(axis.min > 0.0 && axis.max > 0.0)) {
            throw SpecError(fmt::format("log axis '{}' needs positive bounds", axis.name));
        }
        for (auto field : touched_fields(axis.name)) {
            if (std::ranges::find(swept, field) != swept.end()) {
                throw SpecError(fmt::format("axis '{}' overlaps another axis", axis.name));
            }
            swept.push_back(field);
        }
    }
    for (const auto& s : series) {
        for (const auto& [key, value] : s.overrides) {
            if (!is_numeric_key(key)) {
                throw SpecError(fmt::format("unknown series parameter '{}'", key));
            }
            for (auto field : touched_fields(key)) {
                if (std::ranges::find(swept, field) != swept.end()) {
                    throw SpecError(
                        fmt::format("series override '{}' touches a swept axis", key));
                }
            }
        }
    }
    if (outputs.empty()) throw SpecError("a sweep needs at least one output");
}

SweepResult run_sweep(const SweepSpec& spec) {
    spec.validate();

    SweepResult result;
    result.spec = spec;
    for (const auto& s : spec.series) {
        for (const auto& [key, value] : s.overrides) {
            if (std::ranges::find(result.series_columns, key) == result.series_columns.end()) {
                result.series_columns.push_back(key);
            }
        }
    }

    std::vector<Series> curves = spec.series;
    if (curves.empty()) curves.emplace_back();

    std::vector<std::vector<double>> grids;
    for (const auto& axis : spec.axes) grids.push_back(axis.values());
    const std::size_t outer = grids[0].size();
    const std::size_t inner = grids.size() > 1 ? grids[1].size() : 1;

    for (std::size_t i = 0; i < outer; ++i) {
        for (std::size_t j = 0; j < inner; ++j) {
            for (std::size_t s = 0; s < curves.size(); ++s) {
                ParameterSet params = spec.base;
                for (const auto& [key, value] : curves[s].overrides) params.set(key, value);

                SweepRow row;
                row.series_index = s;
                for (const auto& key : result.series_columns) {
                    row.series_values.push_back(params.get(key));
                }
                row.axis_values.push_back(grids[0][i]);
                params.set(spec.axes[0].name, grids[0][i]);
                if (grids.size() > 1) {
                    row.axis_values.push_back(grids[1][j]);
                    params.set(spec.axes[1].name, grids[1][j]);
                }

                const FeasibilityOutcome outcome =
                    mobile_max_bandwidth(params.link_budget(), params.mobility(),
                                         params.rotation(), params.wavelength());
                row.feasible = outcome.feasible;
                for (Output output : spec.outputs) {
                    row.outputs.push_back(row.feasible ? evaluate(params, output, outcome)
                                                       : std::nullopt);
                }
                result.rows.push_back(std::move(row));
            }
        }
    }
    return result;
}

std::vector<std::string_view> preset_names() {
    return {"fig5a", "fig5b", "fig5c", "fig6",  "fig6a",      "fig6b",
            "fig7",  "fig7a", "fig7b", "fig8_sub6", "fig8_mmwave", "fig8_thz"};
}

SweepSpec figure_preset(std::string_view name) {
    SweepSpec spec;
    if (name == "fig5a") {
        spec.name = "fig5a";
        spec.base = stationary_base();
        spec.axes = {linear("pt_dbm", 0.0, 40.0, 41)};
        for (double nf : {0.0, 5.0, 10.0, 15.0}) spec.series.push_back(series({{"nf_db", nf}}));
        spec.outputs = {Output::BMax};
    } else if (name == "fig5b") {
        spec.name = "fig5b";
        spec.base = stationary_base();
        spec.axes = {linear("snr_db", 0.0, 40.0, 41)};
        for (double pt : {10.0, 20.0, 30.0}) spec.series.push_back(series({{"pt_dbm", pt}}));
        spec.outputs = {Output::BMax};
    } else if (name == "fig5c") {
        spec.name = "fig5c";
        spec.base = stationary_base();
        spec.axes = {logarithmic("freq_hz", 1e9, 1e12, 31), linear("distance_m", 50.0, 200.0, 4)};
        spec.outputs = {Output::D1};
    } else if (name == "fig6" || name == "fig6a") {
        spec = mobility_preset(std::string(name), Scenario::UeTwoAngles, true);
    } else if (name == "fig6b") {
        spec = mobility_preset("fig6b", Scenario::UeTwoAngles, false);
    } else if (name == "fig7" || name == "fig7a") {
        spec = mobility_preset(std::string(name), Scenario::RelTwoAngles, true);
    } else if (name == "fig7b") {
        spec = mobility_preset("fig7b", Scenario::RelTwoAngles, false);
    } else if (name == "fig8_sub6") {
        spec = power_preset("fig8_sub6", 3.5e9, 1e7, 1e8);
    } else if (name == "fig8_mmwave") {
        spec = power_preset("fig8_mmwave", 28e9, 4e8, 2e9);
    } else if (name == "fig8_thz") {
        spec = power_preset("fig8_thz", 300e9, 1e9, 1e11);
    } else {
        throw SpecError(fmt::format("unknown preset '{}'", name));
    }
    return spec;
}

std::string format_csv(const SweepResult& result) {
    std::string out;
    auto it = std::back_inserter(out);
    std::vector<std::string_view> header;
    for (const auto& axis : result.spec.axes) header.emplace_back(axis.name);
    for (const auto& key : result.series_columns) header.emplace_back(key);
    for (Output output : result.spec.outputs) header.push_back(column_name(output));
    header.emplace_back("feasible");
    fmt::format_to(it, "{}\n", fmt::join(header, ","));

    for (const auto& row : result.rows) {
        std::vector<std::string> fields;
        for (double v : row.axis_values) fields.push_back(number(v));
        for (double v : row.series_values) fields.push_back(number(v));
        for (const auto& v : row.outputs) fields.push_back(v ? number(*v) : std::string{});
        fields.emplace_back(row.feasible ? "1" : "0");
        fmt::format_to(it, "{}\n", fmt::join(fields, ","));
    }
    return out;
}

std::string format_plot_script(const SweepResult& result, std::string_view data_file) {
    const SweepSpec& spec = result.spec;
    std::string out;
    auto it = std::back_inserter(out);
    fmt::format_to(it, "# farfield plot script v1\n");
    fmt::format_to(it, "title = {}\n", spec.name.empty() ? "sweep" : spec.name);
    fmt::format_to(it, "data = {}\n", data_file.empty() ? spec.name + ".csv" : data_file);
    fmt::format_to(it, "delimiter = ,\nheader_rows = 1\n");

    const Axis& x = spec.axes.front();
    fmt::format_to(it, "x.column = 1\nx.name = {}\nx.label = {}\nx.scale = {}\n", x.name,
                   axis_label(x.name), x.spacing == Spacing::Log ? "log" : "linear");

    std::size_t column = spec.axes.size() + result.series_columns.size();
    for (std::size_t k = 0; k < spec.outputs.size(); ++k) {
        const OutputInfo& o = info(spec.outputs[k]);
        ++column;
        fmt::format_to(it, "y{0}.column = {1}\ny{0}.name = {2}\ny{0}.label = {3}\ny{0}.scale = {4}\n",
                       k + 1, column, o.column, o.label,
                       o.scale == Spacing::Log ? "log" : "linear");
    }

    std::vector<std::string> group_columns;
    std::vector<std::string> group_names;
    for (std::size_t a = 1; a < spec.axes.size(); ++a) {
        group_columns.push_back(std::to_string(a + 1));
        group_names.push_back(spec.axes[a].name);
    }
    for (std::size_t s = 0; s < result.series_columns.size(); ++s) {
        group_columns.push_back(std::to_string(spec.axes.size() + s + 1));
        group_names.push_back(result.series_columns[s]);
    }
    if (!group_columns.empty()) {
        fmt::format_to(it, "group.columns = {}\ngroup.names = {}\n",
                       fmt::join(group_columns, " "), fmt::join(group_names, " "));
    }
    for (std::size_t s = 0; s < spec.series.size(); ++s) {
        std::vector<std::string> parts;
        for (const auto& [key, value] : spec.series[s].overrides) {
            parts.push_back(fmt::format("{}={}", key, value));
        }
        fmt::format_to(it, "series.{} = {}\n", s + 1, fmt::join(parts, " "));
    }
    fmt::format_to(it, "feasible.column = {}\n", column + 1);
    return out;
}

std::size_t emit_csv(const SweepResult& result, const std::filesystem::path& destination) {
    if (result.rows.empty()) throw SpecError("no sweep rows to write");
    const std::string text = format_csv(result);
    write_file(destination, text);
    return text.size();
}

std::size_t emit_plot_script(const SweepResult& result, const std::filesystem::path& destination,
                             std::string_view data_file) {
    if (result.rows.empty()) throw SpecError("no sweep rows to write");
    const std::string text = format_plot_script(result, data_file);
    write_file(destination, text);
    return text.size();
}

}  // namespace farfield::sweep
