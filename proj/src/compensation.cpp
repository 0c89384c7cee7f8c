#include "xrisk/compensation.hpp"

#include <cmath>
#include <sstream>

#include "xrisk/errors.hpp"

namespace xrisk {

EvResult equivalent_variation(const WelfareResult& cornucopia, const WelfareResult& risky,
                              const Preferences& prefs) {
    if (std::abs(prefs.theta_rra - 1.0) > kLogThetaBand) {
        std::ostringstream msg;
        msg << "equivalent_variation: requires log utility (theta = 1), got theta = " << prefs.theta_rra
            << "; use compensating_fraction_general";
        throw DomainError(msg.str());
    }
    if (!std::isfinite(cornucopia.value) || !std::isfinite(risky.value))
        throw DomainError("equivalent_variation: welfare values must be finite");
    EvResult out;
    out.cornucopia_welfare = cornucopia.value;
    out.risky_welfare = risky.value;
    out.log_ev = -(cornucopia.value - risky.value) * effective_discount(prefs);
    out.ev = std::exp(out.log_ev);
    out.wtp_fraction = -std::expm1(out.log_ev);
    return out;
}

EvResult ev_panel(const ScenarioSpec& spec, const EvPanel& panel, const QuadratureOptions& options) {
    const WelfareResult corn = welfare_cornucopia(spec);
    const WelfareResult risky = std::visit(
        [&](const auto& p) -> WelfareResult {
            using P = std::decay_t<decltype(p)>;
            ScenarioSpec s = spec;
            if constexpr (std::is_same_v<P, PanelA>) {
                return welfare_truncated(s, p.T, Route::automatic, options);
            } else if constexpr (std::is_same_v<P, PanelB>) {
                s.lottery = Lottery{p.p3, 0.0, 0.0};
                return welfare_lottery_immediate(s, Route::automatic, options);
            } else if constexpr (std::is_same_v<P, PanelC>) {
                s.lottery = Lottery{p.p3, p.p4, p.T};
                return welfare_lottery_delayed(s, Route::automatic, options);
            } else {
                return welfare_mounting(s, p.epsilon, options);
            }
        },
        panel);
    return equivalent_variation(corn, risky, spec.prefs);
}

double wtp_per_period(const EvResult& ev, double consumption_level) {
    if (!(consumption_level > 0.0)) throw DomainError("wtp_per_period: consumption_level must be > 0");
    return ev.wtp_fraction * consumption_level;
}

double compensating_fraction_general(const ScenarioSpec& spec, double risky_welfare,
                                     const RootOptions& options) {
    spec.validate();
    const double rate = effective_discount(spec.prefs);
    const double theta = spec.prefs.theta_rra;
    const double log_c0 = std::log(spec.c0);
    auto welfare_at = [&](double log_k) {
        return exponential_path_welfare(log_c0 + log_k, spec.g_ai, theta, rate, kInfiniteHorizon);
    };
    const double top = welfare_at(0.0);
    const double slack = 1e-12 * std::max(1.0, std::abs(top));
    if (risky_welfare > top + slack)
        throw DomainError("compensating_fraction_general: risky welfare exceeds cornucopia welfare");
    if (risky_welfare >= top) return 1.0;
    const double bottom = welfare_at(-log_c0);
    if (risky_welfare < bottom)
        throw DomainError("compensating_fraction_general: no scale keeps consumption above subsistence");
    if (risky_welfare == bottom) return 1.0 / spec.c0;
    auto f = [&](double log_k) { return welfare_at(log_k) - risky_welfare; };
    const RootResult root = brent_root(f, -log_c0, 0.0, bottom - risky_welfare, top - risky_welfare, options);
    return std::exp(root.root);
}

}  // namespace xrisk
