// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "farfield/link_budget.hpp"
#include "test_support.hpp"

using namespace farfield;
using farfield::support::kDeg;

namespace {

LinkBudgetParams reference_budget() {
    LinkBudgetParams lb;
    lb.pt_w = 0.2;
    lb.nf_db = 10.0;
    lb.snr_th_db = 20.0;
    lb.temperature_k = 290.0;
    return lb;
}

}  // namespace

TEST(LinkBudget, ArrayGain) {
    const CosinePattern p(1.0);
    EXPECT_DOUBLE_EQ(array_gain(10, p, 0.0, 0.0), 600.0);
    EXPECT_NEAR(array_gain(10, p, 45 * kDeg, 45 * kDeg), 150.0, 1e-9);
    EXPECT_NEAR(aperture_gain(0.1, 1e-3, p, 0.0, 0.0), 6.0 * 200.0 * 200.0, 1e-6);
}

TEST(LinkBudget, ElementLossUsesEachSidesAngles) {
    const CosinePattern p(1.0);
    const auto loss = element_loss(p, RotationState::composite(60 * kDeg, 0.0, 0.0, 60 * kDeg));
    EXPECT_NEAR(loss.ue, 0.25, 1e-15);
    EXPECT_NEAR(loss.ap, 0.25, 1e-15);
    EXPECT_NEAR(loss.combined(), 0.0625, 1e-15);
    EXPECT_DOUBLE_EQ(element_loss(p, RotationState::aligned()).combined(), 1.0);
}

TEST(LinkBudget, ApertureProductReference) {
    auto lb = reference_budget();
    lb.pt_w = 0.2;
    const auto product = aperture_product_requirement(lb, 1e-3, 25.0, 1e10, 1.0);
    ASSERT_TRUE(product.has_value());
    EXPECT_NEAR(*product, 5.856852e-6, 1e-11);
    EXPECT_FALSE(aperture_product_requirement(lb, 1e-3, 25.0, 1e10, 0.0).has_value());
    EXPECT_THROW((void)aperture_product_requirement(lb, 1e-3, 25.0, 1e10, 1.5), DomainError);
}

TEST(LinkBudget, RequiredPsd) {
    LinkBudgetParams lb;
    lb.snr_th_db = 30.0;
    lb.nf_db = 10.0;
    lb.constants = PhysicalConstants::codata();
    EXPECT_NEAR(required_psd(lb), -115.5128, 1e-3);
}

TEST(LinkBudget, ValidationRejectsBadParameters) {
    auto lb = reference_budget();
    lb.pt_w = 0.0;
    EXPECT_THROW(lb.validate(), DomainError);
    lb = reference_budget();
    lb.temperature_k = -1.0;
    EXPECT_THROW(lb.validate(), DomainError);
    EXPECT_THROW((void)snr_at_distance(reference_budget(), {1.0, 1.0}, 1e-3, 0.0, 1e9),
                 DomainError);
}

TEST(LinkBudgetProperty, SnrMeetsThresholdAtRequiredProduct) {
    support::Draws draws(31);
    for (int i = 0; i < 200; ++i) {
        auto lb = reference_budget();
        lb.pt_w = draws.log_uniform(1e-3, 10.0);
        lb.snr_th_db = draws.uniform(0.0, 40.0);
        const double lambda = draws.log_uniform(1e-4, 0.1);
        const double d = draws.uniform(1.0, 200.0);
        const double b = draws.log_uniform(1e6, 1e11);
        const auto product = aperture_product_requirement(lb, lambda, d, b, 1.0);
        ASSERT_TRUE(product.has_value());
        const double d2 = std::sqrt(*product);
        const auto gains = steered_gains({d2, d2, lambda}, lb.pattern, RotationState::aligned());
        EXPECT_NEAR(snr_at_distance(lb, gains, lambda, d, b) / lb.snr_threshold_linear(), 1.0,
                    1e-10);
    }
}

TEST(LinkBudgetProperty, SnrInverseSquareInDistance) {
    support::Draws draws(32);
    const auto lb = reference_budget();
    for (int i = 0; i < 100; ++i) {
        const GainPair g{draws.uniform(1.0, 1e6), draws.uniform(1.0, 1e6)};
        const double d = draws.uniform(0.5, 100.0);
        const double k = draws.uniform(1.1, 10.0);
        const double ratio = snr_at_distance(lb, g, 1e-3, d, 1e9) /
                             snr_at_distance(lb, g, 1e-3, k * d, 1e9);
        EXPECT_NEAR(ratio / (k * k), 1.0, 1e-12);
    }
}
