#pragma once

#include <variant>

#include "xrisk/roots.hpp"
#include "xrisk/welfare.hpp"

namespace xrisk {

/// Consumption-equivalent comparison of cornucopia against a risky scenario.
struct EvResult {
    double ev = 1.0;            ///< per-period consumption scale factor
    double log_ev = 0.0;        ///< kept separately; ev underflows below ~1e-308
    double wtp_fraction = 0.0;  ///< 1 - ev
    double cornucopia_welfare = 0.0;
    double risky_welfare = 0.0;
};

/// Largest |theta - 1| treated as log utility. The mounting-risk tables use
/// theta = 1.0001 as their log case.
inline constexpr double kLogThetaBand = 1e-3;

/// ev = exp(-(W_cornucopia - W_risky) * rho_eff). Only meaningful for log
/// utility; throws DomainError when |theta - 1| > kLogThetaBand.
EvResult equivalent_variation(const WelfareResult& cornucopia, const WelfareResult& risky,
                              const Preferences& prefs);

/// Table 5 panels: the risky scenario the cornucopia is compared against.
struct PanelA { double T; };                   ///< extinction at T
struct PanelB { double p3; };                  ///< immediate doom with p3
struct PanelC { double p3, p4, T; };           ///< delayed-doom lottery
struct PanelD { double epsilon; };             ///< mounting log hazard
using EvPanel = std::variant<PanelA, PanelB, PanelC, PanelD>;

EvResult ev_panel(const ScenarioSpec& spec, const EvPanel& panel,
                  const QuadratureOptions& options = {});

/// (1 - ev) * consumption_level: the consumption given up each year.
double wtp_per_period(const EvResult& ev, double consumption_level);

/// Scale k in (0,1] with W_A(k c0) = risky_welfare, for any theta. Throws
/// DomainError if risky_welfare exceeds W_A or falls below W_A at c0 = 1.
double compensating_fraction_general(const ScenarioSpec& cornucopia_spec, double risky_welfare,
                                     const RootOptions& options = {});

}  // namespace xrisk
