// SPDX-License-Identifier: Apache-2.0

#include "farfield/cli.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <string_view>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <json.hpp>

#include "farfield/feasibility.hpp"
#include "farfield/oracle.hpp"
#include "farfield/parameters.hpp"
#include "farfield/sweep.hpp"

namespace farfield::cli {

namespace {

/// Missing or contradictory arguments detected after parsing.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ParameterFlag {
    std::string_view flag;
    std::string_view key;
    std::string_view help;
};

constexpr std::array<ParameterFlag, 17> kParameterFlags{{
    {"--pt-dbm", "pt_dbm", "Transmit power (dBm)"},
    {"--snr-db", "snr_db", "SNR threshold (dB)"},
    {"--nf-db", "nf_db", "Receiver noise figure (dB)"},
    {"--temp-k", "temp_k", "System temperature (K)"},
    {"--q", "q", "Cosine element pattern order"},
    {"--freq-hz", "freq_hz", "Carrier frequency (Hz)"},
    {"--dmin-m", "d_min_m", "Minimum link distance (m)"},
    {"--dmax-m", "d_max_m", "Maximum link distance (m)"},
    {"--m", "m_coeff", "Mobility coefficient d_max/d_min (sets d_max)"},
    {"--l", "l_coeff", "Aperture ratio D1/D2"},
    {"--scenario", "scenario", "aligned|ue-one|ue-two|rel-one|rel-two|composite"},
    {"--theta-ue-deg", "theta_ue_deg", "UE rotation angle theta (deg)"},
    {"--phi-ue-deg", "phi_ue_deg", "UE rotation angle phi (deg)"},
    {"--theta-rel-deg", "theta_rel_deg", "Relative angle theta (deg)"},
    {"--phi-rel-deg", "phi_rel_deg", "Relative angle phi (deg)"},
    {"--bandwidth-hz", "bandwidth_hz", "Target bandwidth (Hz)"},
    {"--constants", "constants", "codata|paper"},
}};

constexpr std::array<std::string_view, 9> kExtraConfigKeys{
    "out_path", "plot_path", "preset", "seed", "cases", "tol_rel", "axis", "series", "outputs",
};

struct Invocation {
    std::map<std::string, std::string> flags;  // parameter key -> text
    std::string config_path;
    std::string out_path;
    std::string plot_path;
    std::string preset;
    std::string seed;
    std::string cases;
    std::string tol_rel;
    std::vector<std::string> axes;
    std::vector<std::string> series;
    std::vector<std::string> outputs;
};

/// Merged view of config file and flags; flags win.
struct Settings {
    std::map<std::string, std::string> values;
    std::vector<std::string> axes;
    std::vector<std::string> series;
    std::vector<std::string> outputs;

    [[nodiscard]] bool has(const std::string& key) const { return values.contains(key); }
    [[nodiscard]] std::string get(const std::string& key, std::string fallback = {}) const {
        const auto it = values.find(key);
        return it == values.end() ? fallback : it->second;
    }
};

std::string shortest(double v) {
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

std::vector<std::string> string_list(const nlohmann::json& value, const std::string& key) {
    std::vector<std::string> out;
    if (value.is_string()) {
        out.push_back(value.get<std::string>());
        return out;
    }
    if (!value.is_array()) throw SpecError(fmt::format("config key '{}' must be a string list", key));
    for (const auto& item : value) {
        if (!item.is_string()) {
            throw SpecError(fmt::format("config key '{}' must be a string list", key));
        }
        out.push_back(item.get<std::string>());
    }
    return out;
}

void load_config(const std::string& path, Settings& settings) {
    std::ifstream in(path);
    if (!in) throw UsageError(fmt::format("cannot read config file '{}'", path));
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw UsageError(fmt::format("config file '{}': {}", path, e.what()));
    }
    if (!doc.is_object()) throw UsageError(fmt::format("config file '{}' must be a JSON object", path));

    const auto keys = parameter_keys();
    for (const auto& [key, value] : doc.items()) {
        const bool known = std::ranges::find(keys, key) != keys.end() ||
                           std::ranges::find(kExtraConfigKeys, key) != kExtraConfigKeys.end();
        if (!known) throw UsageError(fmt::format("unknown config key '{}'", key));
        if (key == "axis") {
            settings.axes = string_list(value, key);
        } else if (key == "series") {
            settings.series = string_list(value, key);
        } else if (key == "outputs") {
            settings.outputs = string_list(value, key);
        } else if (value.is_number()) {
            settings.values[key] = shortest(value.get<double>());
        } else if (value.is_string()) {
            settings.values[key] = value.get<std::string>();
        } else {
            throw UsageError(fmt::format("config key '{}' must be a number or string", key));
        }
    }
}

Settings resolve(const Invocation& inv) {
    Settings settings;
    if (!inv.config_path.empty()) load_config(inv.config_path, settings);
    for (const auto& [key, value] : inv.flags) settings.values[key] = value;
    const auto put = [&](const char* key, const std::string& value) {
        if (!value.empty()) settings.values[key] = value;
    };
    put("out_path", inv.out_path);
    put("plot_path", inv.plot_path);
    put("preset", inv.preset);
    put("seed", inv.seed);
    put("cases", inv.cases);
    put("tol_rel", inv.tol_rel);
    if (!inv.axes.empty()) settings.axes = inv.axes;
    if (!inv.series.empty()) settings.series = inv.series;
    if (!inv.outputs.empty()) settings.outputs = inv.outputs;
    return settings;
}

/// Applies every parameter key present in `settings`, in canonical key order
/// so that m_coeff always sees the final d_min.
void apply_parameters(const Settings& settings, ParameterSet& params, bool default_fixed_distance) {
    for (std::string_view key : parameter_keys()) {
        const std::string k(key);
        if (settings.has(k)) params.set_text(key, settings.get(k));
    }
    if (default_fixed_distance && !settings.has("d_max_m") && !settings.has("m_coeff") &&
        !settings.has("distance_m")) {
        params.d_max_m = params.d_min_m;
    }
}

template <typename T>
T parse_scalar(const std::string& text, const char* what) {
    T value{};
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw UsageError(fmt::format("invalid {} '{}'", what, text));
    }
    return value;
}

struct ReportLine {
    std::string quantity;
    std::optional<double> value;
    std::string text;
    std::string unit;
};

ReportLine number(std::string quantity, double value, std::string unit) {
    return {std::move(quantity), value, {}, std::move(unit)};
}

ReportLine text(std::string quantity, std::string value) {
    return {std::move(quantity), std::nullopt, std::move(value), "-"};
}

void write_report(const std::vector<ReportLine>& lines, const Settings& settings,
                  std::ostream& out) {
    fmt::print(out, "{:<24}{:<20}{}\n", "quantity", "value", "unit");
    for (const auto& line : lines) {
        const std::string value = line.value ? fmt::format("{:.6g}", *line.value) : line.text;
        fmt::print(out, "{:<24}{:<20}{}\n", line.quantity, value, line.unit);
    }
    const std::string path = settings.get("out_path");
    if (path.empty()) return;
    std::ofstream csv(path, std::ios::binary | std::ios::trunc);
    if (!csv) throw sweep::IoError(fmt::format("cannot open '{}' for writing", path));
    csv << "quantity,value,unit\n";
    for (const auto& line : lines) {
        const std::string value = line.value ? fmt::format("{:.8e}", *line.value) : line.text;
        csv << line.quantity << ',' << value << ',' << line.unit << '\n';
    }
    if (!csv) throw sweep::IoError(fmt::format("failed writing '{}'", path));
}

std::string status_of(const FeasibilityOutcome& outcome) {
    return outcome.feasible ? "FEASIBLE"
                            : fmt::format("INFEASIBLE ({})", to_string(outcome.reason));
}

int cmd_stationary(const Settings& settings, std::ostream& out) {
    ParameterSet params;
    apply_parameters(settings, params, true);
    const LinkBudgetParams lb = params.link_budget();
    const double lambda = params.wavelength();
    const double distance = params.d_min_m;
    const double aperture = stationary_design_aperture(lambda, distance);

    std::vector<ReportLine> lines;
    lines.push_back(number("b_max", stationary_max_bandwidth(lb), "Hz"));
    lines.push_back(number("required_psd", required_psd(lb), "dBm/Hz"));
    lines.push_back(number("wavelength", lambda, "m"));
    lines.push_back(number("design_aperture", aperture, "m"));
    lines.push_back(number("d_fraunhofer",
                           fraunhofer_aligned(ApertureGeometry{aperture, aperture, lambda}), "m"));
    if (settings.has("bandwidth_hz")) {
        const auto quad = stationary_quadratic(lambda, distance, lb, params.bandwidth_hz,
                                               params.d_max_m);
        lines.push_back(number("bandwidth", params.bandwidth_hz, "Hz"));
        lines.push_back(number("discriminant", quad.discriminant, "m^2"));
        if (quad.roots) {
            lines.push_back(text("status", "FEASIBLE"));
            lines.push_back(number("d1_min", quad.roots->x1, "m"));
            lines.push_back(number("d1_max", quad.roots->x2, "m"));
        } else {
            lines.push_back(text("status", "INFEASIBLE (no real roots)"));
        }
    } else {
        lines.push_back(text("status", "FEASIBLE"));
    }
    write_report(lines, settings, out);
    return kExitOk;
}

int cmd_mobile(const Settings& settings, std::ostream& out) {
    ParameterSet params;
    apply_parameters(settings, params, true);
    const MobilityParams mob = params.mobility();
    const FeasibilityOutcome outcome =
        mobile_max_bandwidth(params.link_budget(), mob, params.rotation(), params.wavelength());

    std::vector<ReportLine> lines;
    lines.push_back(text("status", status_of(outcome)));
    lines.push_back(text("scenario", std::string(to_string(params.scenario))));
    lines.push_back(number("b_max", outcome.b_max, "Hz"));
    lines.push_back(number("psi", outcome.psi, "1"));
    lines.push_back(number("psi_db", 10.0 * std::log10(outcome.psi), "dB"));
    lines.push_back(number("d1", outcome.d1, "m"));
    lines.push_back(number("d2", outcome.d2, "m"));
    lines.push_back(number("d_fraunhofer", outcome.d_fraunhofer, "m"));
    lines.push_back(number("d_min", mob.d_min, "m"));
    lines.push_back(number("m_coeff", mob.m_coeff(), "1"));
    lines.push_back(number("l_coeff", mob.l_coeff, "1"));
    write_report(lines, settings, out);
    return kExitOk;
}

int cmd_required_power(const Settings& settings, std::ostream& out) {
    if (!settings.has("bandwidth_hz")) throw UsageError("required-power needs --bandwidth-hz");
    ParameterSet params;
    apply_parameters(settings, params, true);
    const MobilityParams mob = params.mobility();
    const auto pt_dbm = required_transmit_power(params.link_budget(), mob, params.rotation(),
                                                params.bandwidth_hz);

    std::vector<ReportLine> lines;
    lines.push_back(text("status", pt_dbm ? "FEASIBLE" : "INFEASIBLE (element null)"));
    lines.push_back(text("scenario", std::string(to_string(params.scenario))));
    lines.push_back(number("bandwidth", params.bandwidth_hz, "Hz"));
    if (pt_dbm) {
        lines.push_back(number("required_pt", *pt_dbm, "dBm"));
        lines.push_back(number("required_pt_w", dbm_to_watts(*pt_dbm), "W"));
    }
    lines.push_back(number("m_coeff", mob.m_coeff(), "1"));
    lines.push_back(number("l_coeff", mob.l_coeff, "1"));
    write_report(lines, settings, out);
    return kExitOk;
}

sweep::Axis parse_axis(const std::string& text) {
    // name:min:max:points[:linear|log]
    std::vector<std::string> parts;
    std::string_view rest = text;
    while (true) {
        const auto pos = rest.find(':');
        parts.emplace_back(rest.substr(0, pos));
        if (pos == std::string_view::npos) break;
        rest.remove_prefix(pos + 1);
    }
    if (parts.size() != 4 && parts.size() != 5) {
        throw UsageError(fmt::format("axis '{}' must be name:min:max:points[:linear|log]", text));
    }
    sweep::Axis axis;
    axis.name = parts[0];
    axis.min = parse_scalar<double>(parts[1], "axis minimum");
    axis.max = parse_scalar<double>(parts[2], "axis maximum");
    axis.points = parse_scalar<int>(parts[3], "axis point count");
    if (parts.size() == 5) {
        if (parts[4] == "log") {
            axis.spacing = sweep::Spacing::Log;
        } else if (parts[4] != "linear") {
            throw UsageError(fmt::format("axis spacing must be linear or log (got '{}')", parts[4]));
        }
    }
    return axis;
}

sweep::Series parse_series(const std::string& text) {
    // key=value[,key=value...]
    sweep::Series series;
    std::string_view rest = text;
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string_view item = rest.substr(0, comma);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) {
            throw UsageError(fmt::format("series item '{}' must be key=value", item));
        }
        series.overrides.emplace_back(std::string(item.substr(0, eq)),
                                      parse_scalar<double>(std::string(item.substr(eq + 1)),
                                                           "series value"));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return series;
}

int cmd_sweep(const Settings& settings, std::ostream& out) {
    sweep::SweepSpec spec;
    const std::string preset = settings.get("preset");
    if (!preset.empty()) {
        spec = sweep::figure_preset(preset);
    } else {
        if (settings.axes.empty()) throw UsageError("sweep needs --preset or at least one --axis");
        spec.name = "sweep";
        spec.outputs = {sweep::Output::BMax};
    }
    if (!settings.axes.empty()) {
        spec.axes.clear();
        for (const auto& a : settings.axes) spec.axes.push_back(parse_axis(a));
    }
    if (!settings.series.empty()) {
        spec.series.clear();
        for (const auto& s : settings.series) spec.series.push_back(parse_series(s));
    }
    if (!settings.outputs.empty()) {
        spec.outputs.clear();
        for (const auto& o : settings.outputs) spec.outputs.push_back(sweep::parse_output(o));
    }
    apply_parameters(settings, spec.base, preset.empty());

    const sweep::SweepResult result = sweep::run_sweep(spec);
    const std::string csv_path = settings.get("out_path");
    const std::string plot_path = settings.get("plot_path");
    if (csv_path.empty()) {
        out << sweep::format_csv(result);
        if (!plot_path.empty()) sweep::emit_plot_script(result, plot_path);
        return kExitOk;
    }

    const auto feasible = std::ranges::count_if(result.rows, [](const auto& r) { return r.feasible; });
    std::vector<ReportLine> lines;
    lines.push_back(text("sweep", spec.name));
    lines.push_back(number("rows", static_cast<double>(result.rows.size()), "1"));
    lines.push_back(number("feasible_rows", static_cast<double>(feasible), "1"));
    const std::size_t csv_bytes = sweep::emit_csv(result, csv_path);
    lines.push_back(text("csv", csv_path));
    lines.push_back(number("csv_bytes", static_cast<double>(csv_bytes), "B"));
    if (!plot_path.empty()) {
        const std::string data_file = std::filesystem::path(csv_path).filename().string();
        const std::size_t plot_bytes = sweep::emit_plot_script(result, plot_path, data_file);
        lines.push_back(text("plot_script", plot_path));
        lines.push_back(number("plot_script_bytes", static_cast<double>(plot_bytes), "B"));
    }
    Settings no_csv = settings;
    no_csv.values.erase("out_path");
    write_report(lines, no_csv, out);
    return kExitOk;
}

int cmd_verify(const Settings& settings, std::ostream& out) {
    const auto seed = parse_scalar<std::uint64_t>(settings.get("seed", "42"), "seed");
    const int cases = parse_scalar<int>(settings.get("cases", "50"), "case count");
    const double tol = parse_scalar<double>(settings.get("tol_rel", "5e-3"), "tolerance");
    if (cases < 1) throw UsageError("--cases must be >= 1");
    if (!(tol >= 0.0)) throw UsageError("--tol-rel must be non-negative");

    const auto reports = oracle::verify_suite(seed, cases, tol);
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        fmt::print(out, "case {:>3} {} rel_err={:.3e} closed_form={:.6e} brute_force={:.6e} {}\n",
                   i + 1, r.passed ? "PASS" : "FAIL", r.relative_error, r.closed_form,
                   r.brute_force, r.worst_case);
    }
    const auto total = oracle::summarize(reports);
    fmt::print(out, "summary {} cases={} worst_rel_err={:.3e} tol={:.3e}\n",
               total.passed ? "PASS" : "FAIL", total.cases_checked, total.relative_error, tol);

    const std::string path = settings.get("out_path");
    if (!path.empty()) {
        std::ofstream csv(path, std::ios::binary | std::ios::trunc);
        if (!csv) throw sweep::IoError(fmt::format("cannot open '{}' for writing", path));
        csv << "case,closed_form_hz,brute_force_hz,relative_error,status\n";
        for (std::size_t i = 0; i < reports.size(); ++i) {
            const auto& r = reports[i];
            csv << fmt::format("{},{:.8e},{:.8e},{:.8e},{}\n", i + 1, r.closed_form, r.brute_force,
                               r.relative_error, r.passed ? "PASS" : "FAIL");
        }
    }
    return total.passed ? kExitOk : kExitOracleFail;
}

void add_parameter_flags(CLI::App* cmd, Invocation& inv) {
    for (const auto& f : kParameterFlags) {
        const std::string key(f.key);
        cmd->add_option_function<std::string>(
               std::string(f.flag), [&inv, key](const std::string& v) { inv.flags[key] = v; },
               std::string(f.help))
            ->allow_extra_args(false);
    }
    cmd->add_option("--config", inv.config_path, "Flat JSON config document");
    cmd->add_option("--out", inv.out_path, "Write a machine-readable CSV here");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Far-field feasibility analyzer for directional mobile links", "farfield"};
    app.require_subcommand(1);

    Invocation inv;
    auto* stationary = app.add_subcommand("stationary", "Stationary bandwidth limit and apertures");
    auto* mobile = app.add_subcommand("mobile", "Mobile bandwidth limit under a misalignment scenario");
    auto* power = app.add_subcommand("required-power", "Transmit power needed for a target bandwidth");
    auto* sweep_cmd = app.add_subcommand("sweep", "Parameter sweeps and figure presets");
    auto* verify = app.add_subcommand("verify", "Closed form vs brute-force oracle");
    for (auto* cmd : {stationary, mobile, power, sweep_cmd, verify}) add_parameter_flags(cmd, inv);

    sweep_cmd->add_option("--preset", inv.preset, "Figure preset name");
    sweep_cmd->add_option("--axis", inv.axes, "name:min:max:points[:linear|log] (repeatable)");
    sweep_cmd->add_option("--series", inv.series, "key=value[,key=value] (repeatable)");
    sweep_cmd->add_option("--output", inv.outputs, "Output quantity (repeatable)");
    sweep_cmd->add_option("--plot-script", inv.plot_path, "Write a plot description here");
    verify->add_option("--seed", inv.seed, "Random seed (default 42)");
    verify->add_option("--cases", inv.cases, "Number of sampled cases (default 50)");
    verify->add_option("--tol-rel", inv.tol_rel, "Relative tolerance (default 5e-3)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kExitOk;
        }
        fmt::print(err, "error: {}\n", e.what());
        fmt::print(err, "run with --help for usage\n");
        return kExitUsage;
    }

    try {
        const Settings settings = resolve(inv);
        if (stationary->parsed()) return cmd_stationary(settings, out);
        if (mobile->parsed()) return cmd_mobile(settings, out);
        if (power->parsed()) return cmd_required_power(settings, out);
        if (sweep_cmd->parsed()) return cmd_sweep(settings, out);
        return cmd_verify(settings, out);
    } catch (const UsageError& e) {
        fmt::print(err, "error: {}\n", e.what());
        return kExitUsage;
    } catch (const SpecError& e) {
        fmt::print(err, "error: {}\n", e.what());
        return kExitUsage;
    } catch (const DomainError& e) {
        fmt::print(err, "domain error: {}\n", e.what());
        return kExitDomain;
    } catch (const sweep::IoError& e) {
        fmt::print(err, "i/o error: {}\n", e.what());
        return kExitDomain;
    }
}

}  // namespace farfield::cli
