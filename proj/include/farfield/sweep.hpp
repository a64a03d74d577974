// SPDX-License-Identifier: Apache-2.0

#ifndef FARFIELD_SWEEP_HPP
#define FARFIELD_SWEEP_HPP

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "farfield/parameters.hpp"

namespace farfield::sweep {

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

enum class Spacing { Linear, Log };

struct Axis {
    std::string name;
    double min = 0.0;
    double max = 1.0;
    int points = 2;
    Spacing spacing = Spacing::Linear;

    /// Grid values; the first and last equal min and max exactly.
    [[nodiscard]] std::vector<double> values() const;
};

/// Numeric overrides applied on top of the base parameters for one curve.
struct Series {
    std::vector<std::pair<std::string, double>> overrides;
};

enum class Output {
    BMax,
    RequiredPtDbm,
    D1,
    D2,
    DFraunhofer,
    PsiDb,
    RequiredPsd,
};

/// Short name as used in specs ("b_max", "d1", ...).
std::string_view to_string(Output output);
/// CSV column name with unit ("b_max_hz", "d1_m", ...).
std::string_view column_name(Output output);
Output parse_output(std::string_view name);

struct SweepSpec {
    std::string name;
    ParameterSet base;
    std::vector<Axis> axes;
    std::vector<Series> series;
    std::vector<Output> outputs;

    /// Throws SpecError: 1-2 axes with >= 2 points, known numeric keys,
    /// series may not touch a swept field, at least one output.
    void validate() const;
};

struct SweepRow {
    std::vector<double> axis_values;
    std::size_t series_index = 0;
    std::vector<double> series_values;
    std::vector<std::optional<double>> outputs;
    bool feasible = false;
};

struct SweepResult {
    SweepSpec spec;
    /// Union of series override keys in first-appearance order.
    std::vector<std::string> series_columns;
    /// Axis-major: first axis outermost, series innermost.
    std::vector<SweepRow> rows;
};

SweepResult run_sweep(const SweepSpec& spec);

/// Known preset names, in documentation order.
std::vector<std::string_view> preset_names();
SweepSpec figure_preset(std::string_view name);

std::string format_csv(const SweepResult& result);
std::string format_plot_script(const SweepResult& result, std::string_view data_file);

/// Write the CSV; returns bytes written. Empty results raise SpecError
/// without creating the file.
std::size_t emit_csv(const SweepResult& result, const std::filesystem::path& destination);
std::size_t emit_plot_script(const SweepResult& result, const std::filesystem::path& destination,
                             std::string_view data_file = {});

}  // namespace farfield::sweep

#endif  // FARFIELD_SWEEP_HPP
