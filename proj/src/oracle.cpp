// SPDX-License-Identifier: Apache-2.0

#include "farfield/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include <fmt/format.h>

namespace farfield::oracle {

namespace {

constexpr double kDegree = std::numbers::pi / 180.0;
// Decades spanned below the Condition-1 bound by the D2 grid.
constexpr double kGridSpanDecades = 6.0;
constexpr double kBoundarySlack = 1e-12;
// Relative SNR slack so the exact double root survives rounding.
constexpr double kRootSnrSlack = 1e-9;
constexpr int kMaxBracketSteps = 2000;

// Uniform in [0, 1) from the top 53 bits; identical on every platform.
double unit_uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * unit_uniform(rng);
}

}  // namespace

std::string OracleCase::describe() const {
    const RotationState& r = rotation;
    return fmt::format(
        "scenario={} pt_dbm={:.4f} snr_db={:.4f} nf_db={:.4f} q={} L={:.4f} M={:.4f} "
        "d_min={:.4f} lambda={:.6g} angles_deg=({:.2f},{:.2f},{:.2f},{:.2f})",
        to_string(r.scenario()), watts_to_dbm(lb.pt_w), lb.snr_th_db, lb.nf_db,
        lb.pattern.order(), mob.l_coeff, mob.m_coeff(), mob.d_min, wavelength,
        r.theta_ue() / kDegree, r.phi_ue() / kDegree, r.theta_rel() / kDegree,
        r.phi_rel() / kDegree);
}

bool feasible_at(const OracleCase& c, double bandwidth, int grid) {
    const double lambda = c.wavelength;
    const double l = c.mob.l_coeff;
    // d_F is homogeneous of degree 2 in the apertures.
    const double ref_df = fraunhofer(ApertureGeometry{l, 1.0, lambda}, c.rotation);
    const double d2_bound = std::sqrt(c.mob.d_min / ref_df);
    const double threshold = c.lb.snr_threshold_linear();

    for (int k = 0; k < grid; ++k) {
        const double exponent = -kGridSpanDecades * (grid - 1 - k) / (grid - 1);
        const double d2 = d2_bound * std::pow(10.0, exponent);
        const ApertureGeometry g{l * d2, d2, lambda};
        if (fraunhofer(g, c.rotation) > c.mob.d_min * (1.0 + kBoundarySlack)) continue;
        const GainPair gains = steered_gains(g, c.lb.pattern, c.rotation);
        if (snr_at_distance(c.lb, gains, lambda, c.mob.d_max, bandwidth) >= threshold) {
            return true;
        }
    }
    return false;
}

double brute_force_max_bandwidth(const OracleCase& c, int grid, int bisect_iters) {
    if (grid < 1024) throw DomainError(fmt::format("oracle grid must be >= 1024 (got {})", grid));
    if (bisect_iters < 40) {
        throw DomainError(fmt::format("bisection needs >= 40 iterations (got {})", bisect_iters));
    }
    double lo = 0.0;
    double hi = 1.0;
    if (feasible_at(c, hi, grid)) {
        lo = hi;
        for (int i = 0; i < kMaxBracketSteps && feasible_at(c, hi, grid); ++i) {
            lo = hi;
            hi *= 2.0;
        }
    } else {
        lo = 0.5;
        while (!feasible_at(c, lo, grid)) {
            hi = lo;
            lo /= 2.0;
            if (lo < 1e-300) return 0.0;
        }
    }
    for (int i = 0; i < bisect_iters; ++i) {
        const double mid = 0.5 * (lo + hi);
        (feasible_at(c, mid, grid) ? lo : hi) = mid;
    }
    return lo;
}

std::optional<FeasibleInterval> brute_force_stationary_roots(double wavelength, double d_min,
                                                             double d_max,
                                                             const LinkBudgetParams& lb,
                                                             double bandwidth, int grid) {
    if (grid < 4096) throw DomainError(fmt::format("root scan grid must be >= 4096 (got {})", grid));
    const double span = std::sqrt(wavelength * d_min) / 2.0;
    const double step = span / grid;
    const double threshold = lb.snr_threshold_linear() * (1.0 - kRootSnrSlack);
    std::optional<FeasibleInterval> found;
    for (int i = 1; i < grid; ++i) {
        const double d1 = span * i / grid;
        const double d2 = span - d1;
        const ApertureGeometry g{d1, d2, wavelength};
        const GainPair gains = steered_gains(g, lb.pattern, RotationState::aligned());
        if (snr_at_distance(lb, gains, wavelength, d_max, bandwidth) < threshold) continue;
        if (!found) {
            found = FeasibleInterval{d1, d1, step};
        } else {
            found->hi = d1;
        }
    }
    return found;
}

OracleCase sample_case(std::uint64_t seed, int index) {
    std::mt19937_64 rng(seed);
    rng.discard(static_cast<unsigned long long>(index) * 16);

    OracleCase c;
    c.lb.pt_w = dbm_to_watts(uniform(rng, 0.0, 40.0));
    c.lb.snr_th_db = uniform(rng, 0.0, 40.0);
    c.lb.nf_db = uniform(rng, 0.0, 15.0);
    constexpr std::array<double, 3> kOrders{0.5, 1.0, 2.0};
    c.lb.pattern = CosinePattern(kOrders[rng() % kOrders.size()]);

    const double l = uniform(rng, 1.0, 40.0);
    const double m = uniform(rng, 1.0, 100.0);
    const double d_min = uniform(rng, 0.1, 10.0);
    c.mob = MobilityParams::from_ratios(d_min, m, l);
    c.wavelength = wavelength(std::pow(10.0, uniform(rng, 9.0, 12.0)));

    const auto scenario = static_cast<Scenario>(rng() % 6);
    std::array<double, 4> angles{};
    for (double& a : angles) a = uniform(rng, 0.0, 80.0) * kDegree;
    c.rotation = RotationState(scenario, angles[0], angles[1], angles[2], angles[3]);
    return c;
}

OracleReport check_case(const OracleCase& c, double tol, int grid, int bisect_iters) {
    OracleReport report;
    report.closed_form = mobile_max_bandwidth(c.lb, c.mob, c.rotation, c.wavelength).b_max;
    report.brute_force = brute_force_max_bandwidth(c, grid, bisect_iters);
    const double scale = std::max(std::abs(report.closed_form), 1e-300);
    report.relative_error = std::abs(report.brute_force - report.closed_form) / scale;
    if (report.closed_form == 0.0 && report.brute_force == 0.0) report.relative_error = 0.0;
    report.grid_resolution = grid;
    report.cases_checked = 1;
    report.worst_case = c.describe();
    report.passed = report.relative_error <= tol;
    return report;
}

std::vector<OracleReport> verify_suite(std::uint64_t seed, int cases, double tol) {
    if (cases < 1) throw DomainError(fmt::format("verify suite needs >= 1 case (got {})", cases));
    std::vector<OracleReport> reports;
    reports.reserve(static_cast<std::size_t>(cases));
    for (int i = 0; i < cases; ++i) {
        reports.push_back(check_case(sample_case(seed, i), tol));
    }
    return reports;
}

OracleReport summarize(std::span<const OracleReport> reports) {
    OracleReport total;
    total.passed = true;
    for (const auto& r : reports) {
        total.cases_checked += r.cases_checked;
        total.grid_resolution = std::max(total.grid_resolution, r.grid_resolution);
        total.passed = total.passed && r.passed;
        if (total.worst_case.empty() || r.relative_error > total.relative_error) {
            total.relative_error = r.relative_error;
            total.closed_form = r.closed_form;
            total.brute_force = r.brute_force;
            total.worst_case = r.worst_case;
        }
    }
    return total;
}

}  // namespace farfield::oracle
