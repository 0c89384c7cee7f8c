#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "xrisk/errors.hpp"
#include "xrisk/preferences.hpp"

using xrisk::crra_utility;

TEST(Crra, LogAtThetaOne) {
    EXPECT_NEAR(crra_utility(std::exp(2.0), 1.0), 2.0, 1e-15);
    EXPECT_EQ(crra_utility(1.0, 1.0), 0.0);
}

TEST(Crra, ThetaTwo) {
    EXPECT_NEAR(crra_utility(2.0, 2.0), 0.5, 1e-15);
    EXPECT_NEAR(crra_utility(1e300, 2.0), 1.0, 1e-15);
}

TEST(Crra, SubsistenceIsZeroForAllTheta) {
    for (double theta : {0.3, 1.0, 1.0001, 2.0, 5.0}) EXPECT_EQ(crra_utility(1.0, theta), 0.0);
}

TEST(Crra, RejectsBelowSubsistence) {
    EXPECT_THROW(crra_utility(0.5, 2.0), xrisk::DomainError);
}

TEST(Crra, LogSpaceMatchesLevelForm) {
    for (double lc : {0.0, 0.1, 3.0, 20.0}) {
        for (double theta : {0.5, 1.0, 1.5, 3.0}) {
            EXPECT_NEAR(xrisk::crra_utility_log(lc, theta), crra_utility(std::exp(lc), theta),
                        1e-12 * std::max(1.0, std::abs(crra_utility(std::exp(lc), theta))));
        }
    }
}

TEST(Crra, OverflowingLevelStaysFiniteForThetaAboveOne) {
    EXPECT_NEAR(xrisk::crra_utility_log(5000.0, 2.0), 1.0, 1e-15);
}

// Continuity across the series switch at |1 - theta| = 1e-8. Checked
// relative to log c, since the absolute gap grows like (log c)^3.
TEST(Crra, ContinuousAcrossLogSwitch) {
    for (double c : {1.5, 10.0, 1e3, 1e6}) {
        const double lc = std::log(c);
        const double at_one = crra_utility(c, 1.0);
        for (double d : {1e-9, 5e-9, 2e-8, 1e-7}) {
            EXPECT_NEAR(crra_utility(c, 1.0 + d), at_one, 1e-5 * lc);
            EXPECT_NEAR(crra_utility(c, 1.0 - d), at_one, 1e-5 * lc);
        }
    }
}

TEST(Crra, IncreasingInConsumption) {
    for (double theta : {0.5, 1.0, 2.0}) {
        double prev = crra_utility(1.0, theta);
        for (double c = 1.5; c < 1e6; c *= 1.7) {
            const double u = crra_utility(c, theta);
            EXPECT_GT(u, prev);
            prev = u;
        }
    }
}

TEST(Ces, BenthamiteIsSum) {
    const std::vector<double> a{1.0, 2.0, 3.0};
    EXPECT_NEAR(xrisk::ces_aggregate(a, 1.0), 6.0, 1e-14);
}

TEST(Ces, RawlsianIsMinimum) {
    const std::vector<double> a{4.0, 2.5, 3.0};
    EXPECT_EQ(xrisk::ces_aggregate(a, xrisk::kRawlsianLimit), 2.5);
}

TEST(Ces, RejectsZeroThetaAndBadAllocations) {
    const std::vector<double> a{1.0, 2.0};
    EXPECT_THROW(xrisk::ces_aggregate(a, 0.0), xrisk::DomainError);
    EXPECT_THROW(xrisk::ces_aggregate(a, 1.5), xrisk::DomainError);
    EXPECT_THROW(xrisk::ces_aggregate(std::vector<double>{}, 0.5), xrisk::DomainError);
    EXPECT_THROW(xrisk::ces_aggregate(std::vector<double>{1.0, -1.0}, 0.5), xrisk::DomainError);
}

// The power mean N^{-1/theta} * aggregate is nondecreasing in theta; the raw
// power sum is not (for (1,1) it is 2 at theta = 1 and 4 at theta = 0.5).
TEST(Ces, PowerMeanNondecreasingInTheta) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(1.0, 50.0);
    const double thetas[] = {1.0, 0.5, 0.1, -0.5, -2.0, -10.0};
    for (int i = 0; i < 200; ++i) {
        std::vector<double> a(5);
        for (auto& c : a) c = u(rng);
        const double n = static_cast<double>(a.size());
        double prev = INFINITY;
        for (double th : thetas) {
            const double mean = std::pow(n, -1.0 / th) * xrisk::ces_aggregate(a, th);
            EXPECT_LE(mean, prev * (1 + 1e-12));
            prev = mean;
        }
    }
}

TEST(Ces, StrongAversionApproachesMinimum) {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(1.0, 5.0);
    for (int i = 0; i < 200; ++i) {
        // Entries separated by a factor >= 1.2 so the minimum dominates.
        std::vector<double> a{u(rng)};
        for (int k = 0; k < 3; ++k) a.push_back(a.back() * (1.2 + u(rng)));
        const double mn = a.front();
        EXPECT_NEAR(xrisk::ces_aggregate(a, -50.0), mn, 1e-3 * mn);
    }
}

TEST(SocialFlow, ClassicalCorners) {
    const std::vector<double> a{2.0, 8.0};
    EXPECT_NEAR(xrisk::social_flow(xrisk::Benthamite{}, a, 1.0), 2.0 * std::log(10.0), 1e-14);
    EXPECT_NEAR(xrisk::social_flow(xrisk::Millian{}, a, 1.0), std::log(10.0), 1e-14);
    EXPECT_NEAR(xrisk::social_flow(xrisk::Rawlsian{}, a, 1.0), std::log(2.0), 1e-14);
}

TEST(Preferences, EffectiveDiscount) {
    xrisk::Preferences p;
    p.rho = 0.03;
    p.nu = 1.0;
    p.n_pop_growth = 0.01;
    p.m_background = 0.002;
    EXPECT_NEAR(xrisk::effective_discount(p), 0.022, 1e-15);
}

TEST(Preferences, ValidateNamesField) {
    xrisk::Preferences p;
    p.theta_rra = -1.0;
    try {
        p.validate();
        FAIL();
    } catch (const xrisk::DomainError& e) {
        EXPECT_NE(std::string(e.what()).find("theta_rra"), std::string::npos);
    }
}
