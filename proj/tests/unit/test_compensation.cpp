#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "xrisk/compensation.hpp"
#include "xrisk/errors.hpp"

using namespace xrisk;

namespace {

const double kC0 = std::exp(10.757895879);

ScenarioSpec spec(double g_ai, double rho, double theta, double c0 = kC0) {
    ScenarioSpec s;
    s.c0 = c0;
    s.g_ai = g_ai;
    s.prefs.rho = rho;
    s.prefs.theta_rra = theta;
    return s;
}

WelfareResult value(double v) {
    WelfareResult w;
    w.value = v;
    return w;
}

}  // namespace

TEST(EquivalentVariation, NothingToPayFor) {
    const auto ev = equivalent_variation(value(100.0), value(100.0), Preferences{});
    EXPECT_EQ(ev.ev, 1.0);
    EXPECT_EQ(ev.wtp_fraction, 0.0);
}

TEST(EquivalentVariation, RejectsNonLogUtility) {
    Preferences p;
    p.theta_rra = 2.0;
    EXPECT_THROW(equivalent_variation(value(1.0), value(0.5), p), DomainError);
}

TEST(EquivalentVariation, PanelsAtPublishedCells) {
    const auto s = spec(0.05, 0.05, 1.0);
    EXPECT_NEAR(ev_panel(s, PanelB{0.1}).ev, 0.308575, 0.005 * 0.308575);
    EXPECT_NEAR(ev_panel(s, PanelA{100.0}).ev, 0.893228, 0.005 * 0.893228);
    EXPECT_NEAR(ev_panel(s, PanelC{0.1, 0.1, 50.0}).ev, 0.277725, 0.005 * 0.277725);
    EXPECT_EQ(ev_panel(s, PanelB{0.0}).ev, 1.0);
}

TEST(EquivalentVariation, PanelDNearLog) {
    const auto s = spec(0.3, 0.03, 1.0001);
    const double eps = 0.00086570;
    const auto ev = ev_panel(s, PanelD{eps});
    EXPECT_NEAR(ev.log_ev, std::log(8.3005e-5), 0.02 * std::abs(std::log(8.3005e-5)));
}

TEST(EquivalentVariation, LogSpaceSurvivesUnderflow) {
    const auto ev = equivalent_variation(value(1e6), value(0.0), Preferences{});
    EXPECT_EQ(ev.ev, 0.0);
    EXPECT_NEAR(ev.log_ev, -0.03e6, 1e-6);
    EXPECT_EQ(ev.wtp_fraction, 1.0);
}

TEST(EquivalentVariation, ScalingReproducesRiskyWelfare) {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> g(0.05, 0.4), r(0.002, 0.05), p(0.0, 0.9);
    for (int i = 0; i < 100; ++i) {
        auto s = spec(g(rng), r(rng), 1.0);
        const auto ev = ev_panel(s, PanelB{p(rng)});
        auto scaled = s;
        scaled.c0 = s.c0 * ev.ev;
        if (scaled.c0 < 1.0) continue;
        EXPECT_NEAR(welfare_cornucopia(scaled).value, ev.risky_welfare, 1e-8 * ev.risky_welfare);
    }
}

TEST(EquivalentVariation, OrderingsOnGrid) {
    const double gs[] = {0.05, 0.1, 0.2, 0.3, 0.4};
    const double rhos[] = {0.002, 0.01, 0.03, 0.05};
    for (double g : gs) {
        double prev_a = 0.0, prev_c = 0.0;
        for (double rho : rhos) {
            const auto s = spec(g, rho, 1.0);
            const double b = ev_panel(s, PanelB{0.1}).log_ev;
            const double c = ev_panel(s, PanelC{0.1, 0.1, 50.0}).log_ev;
            const double a = ev_panel(s, PanelA{100.0}).log_ev;
            EXPECT_LE(c, b);
            if (rho > rhos[0]) {
                EXPECT_GT(a, prev_a);
                EXPECT_GT(c, prev_c);
            }
            prev_a = a;
            prev_c = c;
        }
    }
}

TEST(Wtp, PerPeriod) {
    EvResult ev;
    ev.ev = 0.125;
    ev.wtp_fraction = 0.875;
    EXPECT_DOUBLE_EQ(wtp_per_period(ev, 1.0), 0.875);
    ev.ev = 0.061;
    ev.wtp_fraction = 1 - 0.061;
    EXPECT_NEAR(wtp_per_period(ev, 1.0), 0.939, 1e-15);
    ev.ev = 1.0;
    ev.wtp_fraction = 0.0;
    EXPECT_EQ(wtp_per_period(ev, 123.0), 0.0);
    EXPECT_THROW(wtp_per_period(ev, 0.0), DomainError);
}

TEST(CompensatingFraction, Identity) {
    const auto s = spec(0.1, 0.03, 2.0);
    EXPECT_EQ(compensating_fraction_general(s, welfare_cornucopia(s).value), 1.0);
}

TEST(CompensatingFraction, MatchesEvForLogUtility) {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> g(0.05, 0.4), r(0.002, 0.05), p(0.0, 0.5);
    for (int i = 0; i < 100; ++i) {
        const auto s = spec(g(rng), r(rng), 1.0);
        const auto ev = ev_panel(s, PanelB{p(rng)});
        if (ev.ev * s.c0 < 1.0) continue;
        EXPECT_NEAR(compensating_fraction_general(s, ev.risky_welfare), ev.ev, 1e-8 * ev.ev);
    }
}

TEST(CompensatingFraction, ThetaTwoResidual) {
    const auto s = spec(0.1, 0.03, 2.0);
    const double target = welfare_cornucopia(s).value - 1e-4;
    const double k = compensating_fraction_general(s, target);
    EXPECT_LT(k, 1.0);
    auto scaled = s;
    scaled.c0 = s.c0 * k;
    EXPECT_LE(std::abs(welfare_cornucopia(scaled).value - target), 1e-10);
}

TEST(CompensatingFraction, BelowSubsistenceHasNoSolution) {
    const auto s = spec(0.1, 0.03, 2.0);
    EXPECT_THROW(compensating_fraction_general(s, 0.0), DomainError);
    EXPECT_THROW(compensating_fraction_general(s, welfare_cornucopia(s).value + 1.0), DomainError);
}
