// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <filesystem>
#include <fstream>
#include <algorithm>
#include <sstream>

#include <gtest/gtest.h>

#include "farfield/sweep.hpp"

using namespace farfield;
using namespace farfield::sweep;

namespace {

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "farfield_sweep_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SweepSpec small_spec() {
    SweepSpec spec;
    spec.name = "small";
    spec.axes = {{"pt_dbm", 0.0, 40.0, 5, Spacing::Linear}};
    spec.series = {{{{"nf_db", 0.0}}}, {{{"nf_db", 10.0}}}};
    spec.outputs = {Output::BMax, Output::D1};
    return spec;
}

}  // namespace

TEST(Sweep, AxisValues) {
    const Axis lin{"pt_dbm", 0.0, 40.0, 5, Spacing::Linear};
    EXPECT_EQ(lin.values(), (std::vector<double>{0, 10, 20, 30, 40}));
    const Axis log{"freq_hz", 1e9, 1e12, 4, Spacing::Log};
    const auto v = log.values();
    ASSERT_EQ(v.size(), 4u);
    EXPECT_EQ(v.front(), 1e9);
    EXPECT_EQ(v.back(), 1e12);
    EXPECT_NEAR(v[1], 1e10, 1e-3);
}

TEST(Sweep, OutputNames) {
    for (auto o : {Output::BMax, Output::RequiredPtDbm, Output::D1, Output::D2,
                   Output::DFraunhofer, Output::PsiDb, Output::RequiredPsd}) {
        EXPECT_EQ(parse_output(to_string(o)), o);
    }
    EXPECT_EQ(column_name(Output::BMax), "b_max_hz");
    EXPECT_THROW(parse_output("nonsense"), SpecError);
}

TEST(Sweep, ValidationErrors) {
    auto spec = small_spec();
    spec.axes.clear();
    EXPECT_THROW(spec.validate(), SpecError);

    spec = small_spec();
    spec.axes[0].points = 1;
    EXPECT_THROW(spec.validate(), SpecError);

    spec = small_spec();
    spec.axes[0].name = "warp_factor";
    EXPECT_THROW(spec.validate(), SpecError);

    spec = small_spec();
    spec.series = {{{{"pt_dbm", 3.0}}}};
    EXPECT_THROW(spec.validate(), SpecError);

    spec = small_spec();
    spec.axes = {{"freq_hz", 0.0, 1e9, 3, Spacing::Log}};
    EXPECT_THROW(spec.validate(), SpecError);

    spec = small_spec();
    spec.axes.push_back({"d_min_m", 0.1, 1.0, 2, Spacing::Linear});
    spec.axes.push_back({"l_coeff", 1.0, 2.0, 2, Spacing::Linear});
    EXPECT_THROW(spec.validate(), SpecError);

    spec = small_spec();
    spec.axes.push_back({"distance_m", 1.0, 2.0, 2, Spacing::Linear});
    spec.axes.push_back({"m_coeff", 1.0, 2.0, 2, Spacing::Linear});
    spec.axes.erase(spec.axes.begin());
    EXPECT_THROW(spec.validate(), SpecError);

    spec = small_spec();
    spec.outputs.clear();
    EXPECT_THROW(spec.validate(), SpecError);
}

TEST(Sweep, RowOrderAndCount) {
    const auto result = run_sweep(small_spec());
    ASSERT_EQ(result.rows.size(), 10u);
    EXPECT_EQ(result.rows[0].axis_values[0], 0.0);
    EXPECT_EQ(result.rows[0].series_index, 0u);
    EXPECT_EQ(result.rows[1].axis_values[0], 0.0);
    EXPECT_EQ(result.rows[1].series_index, 1u);
    EXPECT_EQ(result.rows[2].axis_values[0], 10.0);
    EXPECT_EQ(result.series_columns, (std::vector<std::string>{"nf_db"}));
    // 10 dB more power means 10x the bandwidth
    EXPECT_NEAR(*result.rows[2].outputs[0] / *result.rows[0].outputs[0], 10.0, 1e-9);
}

TEST(Sweep, CsvLayout) {
    const auto csv = format_csv(run_sweep(small_spec()));
    const auto first_line = csv.substr(0, csv.find('\n'));
    EXPECT_EQ(first_line, "pt_dbm,nf_db,b_max_hz,d1_m,feasible");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 11);
    EXPECT_EQ(csv.back(), '\n');
}

TEST(Sweep, InfeasibleRowsHaveEmptyOutputs) {
    SweepSpec spec;
    spec.name = "null";
    spec.base.scenario = Scenario::UeTwoAngles;
    spec.axes = {{"theta_ue_deg", 0.0, 90.0, 2, Spacing::Linear}};
    spec.outputs = {Output::BMax};
    const auto result = run_sweep(spec);
    ASSERT_EQ(result.rows.size(), 2u);
    EXPECT_TRUE(result.rows[0].feasible);
    EXPECT_FALSE(result.rows[1].feasible);
    EXPECT_FALSE(result.rows[1].outputs[0].has_value());
    const auto csv = format_csv(result);
    EXPECT_NE(csv.find("9.00000000e+01,,0\n"), std::string::npos);
}

TEST(Sweep, PresetsRunAndAreDeterministic) {
    for (auto name : preset_names()) {
        const auto spec = figure_preset(name);
        EXPECT_NO_THROW(spec.validate()) << name;
        const auto a = format_csv(run_sweep(spec));
        const auto b = format_csv(run_sweep(figure_preset(name)));
        EXPECT_EQ(a, b) << name;
    }
    EXPECT_THROW(figure_preset("fig99"), SpecError);
}

TEST(Sweep, Fig8MatchesRequiredPowerTable) {
    const auto result = run_sweep(figure_preset("fig8_mmwave"));
    // first row: B = 4e8, first series L = 20, aligned
    ASSERT_FALSE(result.rows.empty());
    EXPECT_EQ(result.rows[0].axis_values[0], 4e8);
    EXPECT_NEAR(*result.rows[0].outputs[0], 9.3121, 1e-3);
}

TEST(Sweep, EmitFiles) {
    const auto result = run_sweep(small_spec());
    const auto csv_path = scratch("small.csv");
    const auto plot_path = scratch("small.plot");
    const auto bytes = emit_csv(result, csv_path);
    EXPECT_EQ(bytes, slurp(csv_path).size());
    EXPECT_EQ(slurp(csv_path), format_csv(result));
    emit_plot_script(result, plot_path, "small.csv");
    const auto script = slurp(plot_path);
    EXPECT_EQ(script.rfind("# farfield plot script v1", 0), 0u);
    EXPECT_NE(script.find("data = small.csv"), std::string::npos);
}

TEST(Sweep, EmitErrors) {
    SweepResult empty;
    const auto path = scratch("empty.csv");
    std::filesystem::remove(path);
    EXPECT_THROW(emit_csv(empty, path), SpecError);
    EXPECT_FALSE(std::filesystem::exists(path));
    EXPECT_THROW(emit_csv(run_sweep(small_spec()), "/nonexistent_dir/x/out.csv"), IoError);
}

namespace {

const SweepRow* find_row(const SweepResult& r, double axis, double l, double theta) {
    for (const auto& row : r.rows) {
        const auto& s = r.series_columns;
        const auto col = [&](const char* key) {
            const auto it = std::find(s.begin(), s.end(), key);
            return row.series_values[static_cast<std::size_t>(it - s.begin())];
        };
        if (row.axis_values[0] == axis && col("l_coeff") == l && col("theta_ue_deg") == theta) {
            return &row;
        }
    }
    return nullptr;
}

}  // namespace

TEST(SweepPresets, BaseParameterTable) {
    struct Expect {
        const char* preset;
        double pt_dbm, snr_db, nf_db, q, temp_k;
    };
    const Expect table[] = {
        {"fig5a", 23, 30, 10, 1, 290},       {"fig5b", 23, 30, 10, 1, 290},
        {"fig5c", 23, 30, 10, 1, 290},       {"fig6", 23, 30, 10, 1, 290},
        {"fig6b", 23, 30, 10, 1, 290},       {"fig7", 23, 30, 10, 1, 290},
        {"fig7b", 23, 30, 10, 1, 290},       {"fig8_sub6", 23, 20, 10, 1, 290},
        {"fig8_mmwave", 23, 20, 10, 1, 290}, {"fig8_thz", 23, 20, 10, 1, 290},
    };
    for (const auto& e : table) {
        const auto spec = figure_preset(e.preset);
        EXPECT_EQ(spec.base.pt_dbm, e.pt_dbm) << e.preset;
        EXPECT_EQ(spec.base.snr_db, e.snr_db) << e.preset;
        EXPECT_EQ(spec.base.nf_db, e.nf_db) << e.preset;
        EXPECT_EQ(spec.base.q, e.q) << e.preset;
        EXPECT_EQ(spec.base.temp_k, e.temp_k) << e.preset;
        EXPECT_EQ(spec.base.constants, ConstantsPreset::Paper) << e.preset;
    }
    for (const char* name : {"fig8_sub6", "fig8_mmwave", "fig8_thz"}) {
        const auto spec = figure_preset(name);
        EXPECT_EQ(spec.base.d_min_m, 0.5) << name;
        for (const auto& s : spec.series) {
            ParameterSet p = spec.base;
            for (const auto& [k, v] : s.overrides) p.set(k, v);
            const bool stationary = p.l_coeff == 1.0;
            EXPECT_EQ(p.d_max_m, stationary ? 0.5 : 25.0) << name;
        }
    }
    const auto thz = figure_preset("fig8_thz");
    EXPECT_EQ(thz.axes[0].min, 1e9);
    EXPECT_EQ(thz.axes[0].max, 1e11);
    EXPECT_EQ(thz.axes[0].spacing, Spacing::Log);
    const auto c = figure_preset("fig5c");
    ASSERT_EQ(c.axes.size(), 2u);
    EXPECT_EQ(c.outputs, (std::vector<Output>{Output::D1}));
}

TEST(SweepPresets, Fig5aReferenceRow) {
    const auto result = run_sweep(figure_preset("fig5a"));
    bool found = false;
    for (const auto& row : result.rows) {
        if (row.axis_values[0] == 23.0 && row.series_values[0] == 10.0) {
            EXPECT_NEAR(*row.outputs[0] / 7.10e13, 1.0, 1e-3);
            found = true;
        }
    }
    EXPECT_TRUE(found);
}

TEST(SweepPresets, Fig6aReferenceRow) {
    const auto result = run_sweep(figure_preset("fig6a"));
    const auto* row = find_row(result, 50.0, 1.0, 0.0);
    ASSERT_NE(row, nullptr);
    EXPECT_NEAR(*row->outputs[0] / 2.84e10, 1.0, 1e-3);
}

TEST(SweepPresets, Fig8ReferenceRows) {
    const auto result = run_sweep(figure_preset("fig8_mmwave"));
    const auto* l20 = find_row(result, 2e9, 20.0, 0.0);
    const auto* l30 = find_row(result, 2e9, 30.0, 0.0);
    ASSERT_TRUE(l20 && l30);
    EXPECT_NEAR(*l20->outputs[0], 16.3, 0.05);
    EXPECT_NEAR(*l30->outputs[0], 19.55, 0.05);
}
