#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "xrisk/errors.hpp"
#include "xrisk/growth.hpp"

using namespace xrisk;

TEST(Ces, DirectArithmetic) {
    EXPECT_NEAR(ces_production(1.0, 2.0, 0.5, 0.5), std::pow(0.5 + 0.5 * std::sqrt(2.0), 2.0), 1e-14);
    EXPECT_NEAR(ces_production(1.0, 2.0, 0.5, 0.5), 1.45711, 1e-5);
}

TEST(Ces, EqualInputs) {
    for (double c : {0.3, 1.0, 7.0, 1e6})
        for (double sigma : {-3.0, -1.0, 0.5})
            EXPECT_NEAR(ces_production(c, c, sigma, 0.3), c, 1e-12 * c);
}

TEST(Ces, HomogeneousOfDegreeOne) {
    for (double lambda : {0.01, 2.0, 1e5}) {
        const double base = ces_production(3.0, 0.7, -1.0, 0.5);
        EXPECT_NEAR(ces_production(lambda * 3.0, lambda * 0.7, -1.0, 0.5), lambda * base, 1e-12 * lambda * base);
    }
}

TEST(Output, ArrangedInputs) {
    ProductionParams p;
    p.sigma = 0.5;
    p.N = 1.0;  // software = A (h N + psi chi K) = 2 at K = 1
    EXPECT_NEAR(output(p, 1.0, Regime::full_automation), 1.45711, 1e-5);
    EXPECT_THROW(output(p, 0.0, Regime::full_automation), DomainError);
}

TEST(Output, BottleneckSaturates) {
    const ProductionParams p;
    const double y = output(p, 1e6, Regime::bottlenecked);
    EXPECT_LT(output(p, 1e8, Regime::bottlenecked) / y - 1.0, 0.01);
    EXPECT_GT(output(p, 2.0, Regime::full_automation), output(p, 1.0, Regime::full_automation));
}

TEST(Simulate, NoAccumulationKeepsCapital) {
    SimulationSettings s;
    s.saving_rate = 0.0;
    s.delta = 0.0;
    s.K0 = 3.0;
    s.horizon = 50.0;
    const auto tr = simulate(ProductionParams{}, Regime::full_automation, s);
    for (double k : tr.K) EXPECT_EQ(k, 3.0);
}

TEST(Simulate, RejectsBadSettings) {
    SimulationSettings s;
    s.dt = 0.0;
    EXPECT_THROW(simulate(ProductionParams{}, Regime::full_automation, s), DomainError);
    s = SimulationSettings{};
    s.K0 = -1.0;
    EXPECT_THROW(simulate(ProductionParams{}, Regime::full_automation, s), DomainError);
}

TEST(Simulate, StepTooLargeIsReported) {
    SimulationSettings s;
    s.saving_rate = 0.0;
    s.delta = 5.0;
    s.dt = 2.0;
    s.horizon = 20.0;
    EXPECT_THROW(simulate(ProductionParams{}, Regime::full_automation, s), DomainError);
}

TEST(GrowthRate, ExactExponential) {
    std::vector<double> t, y;
    for (int i = 0; i <= 400; ++i) {
        t.push_back(0.5 * i);
        y.push_back(std::exp(0.2 * t.back()));
    }
    EXPECT_NEAR(asymptotic_growth_rate(t, y), 0.2, 1e-12);
    EXPECT_THROW(asymptotic_growth_rate(std::vector<double>{0, 1, 2}, std::vector<double>{1, 2, 3}), DomainError);
}

// Y ~ alpha a_K K once K / N is large, so K grows at s alpha a_K - delta.
TEST(GrowthRate, FullAutomationMatchesAkLimit) {
    const ProductionParams p;  // alpha = A psi chi = 1, so alpha a_K = F(1, 1) = 1
    EXPECT_NEAR(asymptotic_capital_productivity(p), 1.0, 1e-15);
    const std::pair<double, double> cases[] = {{0.3, 0.05}, {0.2, 0.02}, {0.4, 0.1}};
    for (const auto& [s, delta] : cases) {
        SimulationSettings cfg;
        cfg.saving_rate = s;
        cfg.delta = delta;
        const auto tr = simulate(p, Regime::full_automation, cfg);
        const double a_k = tr.Y.back() / tr.K.back();
        EXPECT_NEAR(asymptotic_growth_rate(tr), s * a_k - delta, 1e-3);
    }
    SimulationSettings cfg;
    const auto tr = simulate(p, Regime::full_automation, cfg);
    EXPECT_NEAR(asymptotic_growth_rate(tr.times, tr.K), 0.25, 1e-3);
}

TEST(GrowthRate, BottleneckFollowsTechnology) {
    for (double s : {0.2, 0.4}) {
        SimulationSettings cfg;
        cfg.saving_rate = s;
        cfg.tech_growth = 0.0175;
        const auto tr = simulate(ProductionParams{}, Regime::bottlenecked, cfg);
        EXPECT_NEAR(asymptotic_growth_rate(tr), 0.0175, 1e-3) << "s = " << s;
    }
}

TEST(Simulate, FourthOrderConvergence) {
    SimulationSettings cfg;
    cfg.tech_growth = 0.01;
    auto end_capital = [&cfg](double dt) {
        cfg.dt = dt;
        return simulate(ProductionParams{}, Regime::full_automation, cfg).K.back();
    };
    const double k1 = end_capital(0.1), k2 = end_capital(0.05), k3 = end_capital(0.025);
    // Halving dt should shrink the difference by about 2^4.
    const double ratio = (k1 - k2) / (k2 - k3);
    EXPECT_GT(ratio, 12.0);
    EXPECT_LT(ratio, 20.0);
    EXPECT_LT(std::abs(k2 - k3) / k3, 1e-6);
}

TEST(FailureModes, Lifespans) {
    FailureModeSettings s;
    EXPECT_EQ(expected_lifespan(failure_mode_path(FailureMode::fm1, s).hazard), 0.0);
    s.switch_time = 50.0;
    EXPECT_EQ(expected_lifespan(failure_mode_path(FailureMode::fm2, s).hazard), 50.0);
    EXPECT_EQ(expected_lifespan(failure_mode_path(FailureMode::fm3, s).hazard), 50.0);
    s.epsilon = 2e-4;
    s.g_ai = 0.2;
    EXPECT_NEAR(expected_lifespan(failure_mode_path(FailureMode::fm4, s).hazard), 198.17, 0.005);
}

TEST(FailureModes, CrashBelowSubsistenceIsClamped) {
    FailureModeSettings s;
    s.c0 = 2.0;
    s.g_ai = 0.05;
    s.switch_time = 10.0;
    s.crash_factor = 0.1;  // 2 e^{0.5} * 0.1 < 1
    const auto fm = failure_mode_path(FailureMode::fm5, s);
    EXPECT_TRUE(fm.existential_threat);
    EXPECT_EQ(fm.path.consumption(10.0), 1.0);
    EXPECT_NEAR(fm.path.consumption(20.0), std::exp(0.0175 * 10.0), 1e-12);
    EXPECT_NEAR(fm.path.consumption(5.0), 2.0 * std::exp(0.25), 1e-12);
}

TEST(FailureModes, MildCrashAndPostStopExtinction) {
    FailureModeSettings s;
    s.c0 = 100.0;
    s.switch_time = 10.0;
    s.crash_factor = 0.5;
    s.post_stop_extinction = 40.0;
    const auto fm = failure_mode_path(FailureMode::fm5, s);
    EXPECT_FALSE(fm.existential_threat);
    EXPECT_NEAR(fm.path.consumption(10.0), 50.0 * std::exp(0.5), 1e-9);
    EXPECT_EQ(expected_lifespan(fm.hazard), 40.0);
    s.crash_factor = 0.0;
    EXPECT_THROW(failure_mode_path(FailureMode::fm5, s), DomainError);
}
