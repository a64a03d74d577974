// SPDX-License-Identifier: Apache-2.0

#ifndef FARFIELD_ORACLE_HPP
#define FARFIELD_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "farfield/feasibility.hpp"

namespace farfield::oracle {

// Brute-force checks of the closed-form bounds. The feasibility predicate here
// uses only the Fraunhofer distances and raw SNR from element and array gains;
// nothing in this namespace calls penalty() or any bandwidth bound.

struct OracleCase {
    LinkBudgetParams lb;
    MobilityParams mob;
    RotationState rotation;
    double wavelength = 1e-3;

    [[nodiscard]] std::string describe() const;
};

struct OracleReport {
    double closed_form = 0.0;   // Hz
    double brute_force = 0.0;   // Hz
    double relative_error = 0.0;
    int grid_resolution = 0;
    int cases_checked = 0;
    std::string worst_case;
    bool passed = false;
};

struct FeasibleInterval {
    double lo;
    double hi;
    double step;
};

/// True if some D2 on a log grid in (0, Condition-1 bound], with D1 = L D2,
/// meets both the scenario Fraunhofer condition and SNR(d_max) >= threshold.
bool feasible_at(const OracleCase& c, double bandwidth, int grid);

/// Largest feasible bandwidth, bracketed by doubling from 1 Hz then bisected.
double brute_force_max_bandwidth(const OracleCase& c, int grid = 1024, int bisect_iters = 60);

/// Feasible D1 interval for the aligned stationary problem with
/// D2 = sqrt(lambda d_min)/2 - D1, found by scanning D1. nullopt when empty.
std::optional<FeasibleInterval> brute_force_stationary_roots(double wavelength, double d_min,
                                                             double d_max,
                                                             const LinkBudgetParams& lb,
                                                             double bandwidth, int grid = 4096);

/// Seeded random instance across all six scenarios.
OracleCase sample_case(std::uint64_t seed, int index);

/// Closed form vs brute force on one instance.
OracleReport check_case(const OracleCase& c, double tol, int grid = 1024, int bisect_iters = 60);

/// One report per sampled case, in sampling order.
std::vector<OracleReport> verify_suite(std::uint64_t seed, int cases, double tol);

/// Aggregate: worst relative error, total count, passed iff every case passed.
OracleReport summarize(std::span<const OracleReport> reports);

}  // namespace farfield::oracle

#endif  // FARFIELD_ORACLE_HPP
