// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "farfield/feasibility.hpp"
#include "test_support.hpp"

using namespace farfield;
using farfield::support::kDeg;

namespace {

LinkBudgetParams default_budget() { return LinkBudgetParams{}; }

LinkBudgetParams paper_budget(double snr_db) {
    LinkBudgetParams lb;
    lb.snr_th_db = snr_db;
    lb.constants = PhysicalConstants::paper();
    return lb;
}

RotationState composite45() {
    return RotationState::composite(45 * kDeg, 45 * kDeg, 45 * kDeg, 45 * kDeg);
}

LinkBudgetParams random_budget(support::Draws& draws) {
    LinkBudgetParams lb;
    lb.pt_w = dbm_to_watts(draws.uniform(0.0, 40.0));
    lb.snr_th_db = draws.uniform(0.0, 40.0);
    lb.nf_db = draws.uniform(0.0, 15.0);
    lb.pattern = CosinePattern(draws.uniform(0.0, 3.0));
    return lb;
}

RotationState random_rotation(support::Draws& draws) {
    const double a = draws.angle(80.0), b = draws.angle(80.0);
    const double c = draws.angle(80.0), d = draws.angle(80.0);
    switch (static_cast<int>(draws.uniform(0.0, 6.0))) {
        case 0: return RotationState::aligned();
        case 1: return RotationState::ue_one(a);
        case 2: return RotationState::ue_two(a, b);
        case 3: return RotationState::rel_one(d);
        case 4: return RotationState::rel_two(c, d);
        default: return RotationState::composite(a, b, c, d);
    }
}

}  // namespace

TEST(Feasibility, StationaryBound) {
    EXPECT_NEAR(stationary_max_bandwidth(default_budget()) / 7.10037865e13, 1.0, 1e-8);
    auto lb = default_budget();
    lb.constants = PhysicalConstants::paper();
    EXPECT_NEAR(stationary_max_bandwidth(lb) / 7.10371789e13, 1.0, 1e-8);
}

TEST(Feasibility, DesignAperture) {
    EXPECT_NEAR(stationary_design_aperture(wavelength(300e9), 200.0), 0.1117647, 1e-6);
    EXPECT_NEAR(stationary_design_aperture(wavelength(1e9), 100.0), 1.36883, 1e-5);
    const double d = stationary_design_aperture(1e-3, 200.0);
    EXPECT_NEAR(fraunhofer_aligned({d, d, 1e-3}), 200.0, 1e-9);
}

TEST(Feasibility, PenaltyReference) {
    const auto psi = penalty(RotationState::aligned(), 20.0, 50.0, CosinePattern(1.0));
    ASSERT_TRUE(psi.has_value());
    EXPECT_NEAR(*psi, 75969.140625, 1e-6);
    EXPECT_NEAR(10 * std::log10(*psi), 48.80637, 1e-5);
    EXPECT_THROW((void)penalty(RotationState::aligned(), 20.0, 0.5, CosinePattern(1.0)),
                 DomainError);
}

TEST(Feasibility, MobileReference) {
    const double lambda = wavelength(300e9);
    const auto a = mobile_max_bandwidth(default_budget(), MobilityParams::from_ratios(0.5, 5, 1),
                                        RotationState::aligned(), lambda);
    EXPECT_TRUE(a.feasible);
    EXPECT_NEAR(a.b_max / 2.84015146e12, 1.0, 1e-8);
    const auto b = mobile_max_bandwidth(default_budget(), MobilityParams::from_ratios(0.5, 50, 1),
                                        RotationState::aligned(), lambda);
    EXPECT_NEAR(b.b_max / 2.84015146e10, 1.0, 1e-8);
    EXPECT_NEAR(b.d_fraunhofer, 0.5, 1e-12);
    EXPECT_DOUBLE_EQ(b.d1, b.d2);
}

TEST(Feasibility, RequiredPowerTable) {
    struct Row {
        double b, l, aligned, composite;
    };
    const Row rows[] = {
        {2e7, 20, -3.6982, 8.3087},   {2e7, 30, -0.4543, 11.5634},
        {4e8, 20, 9.3121, 21.3190},   {4e8, 30, 12.5560, 24.5737},
        {2e9, 20, 16.3018, 28.3087},  {2e9, 30, 19.5457, 31.5634},
        {1e11, 20, 33.2915, 45.2984}, {1e11, 30, 36.5354, 48.5531},
    };
    const auto lb = paper_budget(20.0);
    for (const auto& r : rows) {
        const auto mob = MobilityParams::from_ratios(0.5, 50.0, r.l);
        const auto pa = required_transmit_power(lb, mob, RotationState::aligned(), r.b);
        const auto pc = required_transmit_power(lb, mob, composite45(), r.b);
        ASSERT_TRUE(pa && pc);
        EXPECT_NEAR(*pa, r.aligned, 1e-4) << "B=" << r.b << " L=" << r.l;
        EXPECT_NEAR(*pc, r.composite, 1e-4) << "B=" << r.b << " L=" << r.l;
    }
}

TEST(Feasibility, ElementNullIsInfeasible) {
    const auto rot = RotationState::ue_two(90 * kDeg, 0.0);
    const auto out = mobile_max_bandwidth(default_budget(), MobilityParams::from_ratios(0.5, 2, 3),
                                          rot, 1e-3);
    EXPECT_FALSE(out.feasible);
    EXPECT_EQ(out.reason, Infeasibility::ElementNull);
    EXPECT_EQ(out.b_max, 0.0);
    EXPECT_TRUE(std::isinf(out.psi));
    EXPECT_GT(out.d1, 0.0);
    EXPECT_FALSE(required_transmit_power(default_budget(), MobilityParams::from_ratios(0.5, 2, 3),
                                         rot, 1e9)
                     .has_value());
}

TEST(Feasibility, MobilityValidation) {
    EXPECT_THROW((MobilityParams{1.0, 0.5, 1.0}.validate()), DomainError);
    EXPECT_THROW((MobilityParams{1.0, 2.0, 0.5}.validate()), DomainError);
    EXPECT_THROW((MobilityParams{0.0, 2.0, 1.0}.validate()), DomainError);
}

TEST(Feasibility, QuadraticDiscriminantSign) {
    const auto lb = default_budget();
    const double lambda = 1e-3;
    const double b_stat = stationary_max_bandwidth(lb);
    const auto below = stationary_quadratic(lambda, 200.0, lb, 0.5 * b_stat, 200.0);
    ASSERT_TRUE(below.feasible());
    EXPECT_GT(below.discriminant, 0.0);
    EXPECT_LT(below.roots->x1, below.roots->x2);
    const auto above = stationary_quadratic(lambda, 200.0, lb, 1.5 * b_stat, 200.0);
    EXPECT_FALSE(above.feasible());
    EXPECT_LT(above.discriminant, 0.0);
    // at the bound the two roots merge at the equal-aperture design
    const auto tie = stationary_quadratic(lambda, 200.0, lb, b_stat, 200.0);
    ASSERT_TRUE(tie.feasible());
    EXPECT_NEAR(tie.roots->x1, stationary_design_aperture(lambda, 200.0), 1e-5);
}

TEST(FeasibilityProperty, SelfConsistentDesign) {
    support::Draws draws(41);
    for (int i = 0; i < 100; ++i) {
        const auto lb = random_budget(draws);
        const auto mob = MobilityParams::from_ratios(draws.uniform(0.1, 10.0),
                                                     draws.uniform(1.0, 100.0),
                                                     draws.uniform(1.0, 40.0));
        const auto rot = random_rotation(draws);
        const double lambda = draws.log_uniform(3e-4, 0.3);
        const auto out = mobile_max_bandwidth(lb, mob, rot, lambda);
        ASSERT_TRUE(out.feasible);
        EXPECT_NEAR(out.d_fraunhofer / mob.d_min, 1.0, 1e-9);
        EXPECT_NEAR(out.d1 / out.d2, mob.l_coeff, 1e-9 * mob.l_coeff);
        const auto gains = steered_gains({out.d1, out.d2, lambda}, lb.pattern, rot);
        const double snr = snr_at_distance(lb, gains, lambda, mob.d_max, out.b_max);
        EXPECT_NEAR(snr / lb.snr_threshold_linear(), 1.0, 1e-9);
    }
}

TEST(FeasibilityProperty, InverseSquareMobilityScaling) {
    support::Draws draws(42);
    for (int i = 0; i < 100; ++i) {
        const auto lb = random_budget(draws);
        const auto rot = random_rotation(draws);
        const double l = draws.uniform(1.0, 40.0);
        const double m = draws.uniform(1.0, 50.0);
        const auto b1 = mobile_bandwidth_bound(lb, MobilityParams::from_ratios(1.0, m, l), rot);
        const auto b2 = mobile_bandwidth_bound(lb, MobilityParams::from_ratios(1.0, 2 * m, l), rot);
        ASSERT_TRUE(b1 && b2);
        EXPECT_NEAR(*b1 / *b2, 4.0, 4.0 * 1e-12);
    }
}

TEST(FeasibilityProperty, BoundNeverExceedsStationary) {
    support::Draws draws(43);
    for (int i = 0; i < 200; ++i) {
        const auto lb = random_budget(draws);
        const auto mob = MobilityParams::from_ratios(1.0, draws.uniform(1.0, 100.0),
                                                     draws.uniform(1.0, 40.0));
        const auto b = mobile_bandwidth_bound(lb, mob, random_rotation(draws));
        ASSERT_TRUE(b);
        EXPECT_LE(*b, stationary_max_bandwidth(lb) * (1 + 1e-12));
    }
}

TEST(FeasibilityProperty, RequiredPowerInvertsBound) {
    support::Draws draws(44);
    for (int i = 0; i < 100; ++i) {
        const auto lb = random_budget(draws);
        const auto mob = MobilityParams::from_ratios(draws.uniform(0.1, 10.0),
                                                     draws.uniform(1.0, 100.0),
                                                     draws.uniform(1.0, 40.0));
        const auto rot = random_rotation(draws);
        EXPECT_TRUE(roundtrip_check(lb, mob, rot));
        const auto b = mobile_bandwidth_bound(lb, mob, rot);
        const auto pt = required_transmit_power(lb, mob, rot, *b);
        ASSERT_TRUE(pt);
        EXPECT_NEAR(*pt, watts_to_dbm(lb.pt_w), 1e-6);
    }
}

TEST(FeasibilityProperty, StationaryReducesFromMobile) {
    support::Draws draws(45);
    for (int i = 0; i < 100; ++i) {
        const auto lb = random_budget(draws);
        const auto b = mobile_bandwidth_bound(lb, MobilityParams::from_ratios(1.0, 1.0, 1.0),
                                              RotationState::aligned());
        EXPECT_NEAR(*b / stationary_max_bandwidth(lb), 1.0, 1e-12);
    }
}
