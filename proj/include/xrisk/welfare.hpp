#pragma once

#include <optional>

#include "xrisk/consumption_path.hpp"
#include "xrisk/hazard.hpp"
#include "xrisk/preferences.hpp"
#include "xrisk/quadrature.hpp"

namespace xrisk {

/// Lottery over takeover outcomes: immediate doom with p3, otherwise
/// non-corrigible with p4, which ends humanity T_delayed years after takeover.
struct Lottery {
    double p3 = 0.0;
    double p4 = 0.0;
    double T_delayed = 0.0;
};

/// Full input to a welfare evaluation. Consumption is normalized to the
/// subsistence threshold and follows C(t) = c0 exp(g t), with g = g_baseline
/// without TAI and g = g_ai after takeover.
struct ScenarioSpec {
    double c0 = 1.0;
    double g_baseline = 0.0175;
    double g_ai = 0.05;
    Preferences prefs;
    HazardModel hazard = ZeroHazard{};
    std::optional<Lottery> lottery;

    void validate() const;
};

/// How to evaluate: closed form where one exists (automatic), or force a
/// route for cross-checking.
enum class Route { automatic, closed_form, quadrature };

/// W0: no takeover, growth g_baseline, no AI hazard.
WelfareResult welfare_no_takeover(const ScenarioSpec& spec, Route route = Route::automatic,
                                  const QuadratureOptions& options = {});

/// W_A: aligned, corrigible TAI. Growth g_ai forever.
WelfareResult welfare_cornucopia(const ScenarioSpec& spec, Route route = Route::automatic,
                                 const QuadratureOptions& options = {});

/// W_B(T): growth g_ai until certain extinction at T.
WelfareResult welfare_truncated(const ScenarioSpec& spec, double T, Route route = Route::automatic,
                                const QuadratureOptions& options = {});

/// W_C(epsilon): growth g_ai with hazard epsilon * log C(t). Quadrature only.
WelfareResult welfare_mounting(const ScenarioSpec& spec, double epsilon,
                               const QuadratureOptions& options = {});

/// W_D = (1 - p3) W_A. Requires spec.lottery.
WelfareResult welfare_lottery_immediate(const ScenarioSpec& spec, Route route = Route::automatic,
                                        const QuadratureOptions& options = {});

/// W_E = (1 - p3) p4 W_B(T_delayed) + (1 - p3)(1 - p4) W_A. Requires spec.lottery.
WelfareResult welfare_lottery_delayed(const ScenarioSpec& spec, Route route = Route::automatic,
                                      const QuadratureOptions& options = {});

/// Long-run survival probability under the lottery, (1 - p3)(1 - p4).
double lottery_long_run_survival(const Lottery& lottery) noexcept;

/// Welfare along the g_ai path under spec.hazard. Closed form for the zero,
/// constant and one-off models; quadrature otherwise.
WelfareResult welfare_under_hazard(const ScenarioSpec& spec, Route route = Route::automatic,
                                   const QuadratureOptions& options = {});

/// Discounted, survival-weighted CRRA welfare along an arbitrary piecewise
/// exponential consumption path, by quadrature.
WelfareResult welfare_along(const Preferences& prefs, const ConsumptionPath& path,
                            const HazardModel& hazard, const QuadratureOptions& options = {});

/// integral_0^T e^{-rate t} u(exp(log_c0 + growth t)) dt in closed form.
/// T may be kInfiniteHorizon, which requires rate > 0 and, for theta < 1,
/// rate > (1 - theta) growth (DivergenceError otherwise).
double exponential_path_welfare(double log_c0, double growth, double theta_rra, double rate,
                                double T);

}  // namespace xrisk
