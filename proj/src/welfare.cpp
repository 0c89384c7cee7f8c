#include "xrisk/welfare.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "xrisk/errors.hpp"

namespace xrisk {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

/// integral_0^T t^n e^{-r t} dt for n in {0,1,2}.
double discounted_moment(int n, double r, double T) {
    if (!std::isfinite(T)) {
        const double r_n1 = std::pow(r, n + 1);
        return n == 2 ? 2.0 / r_n1 : 1.0 / r_n1;
    }
    const double x = r * T;
    const double t_n1 = std::pow(T, n + 1);
    if (std::abs(x) < 0.5) {
        // T^{n+1} sum_k (-x)^k / (k! (n + k + 1))
        double term = 1.0;
        double sum = 0.0;
        for (int k = 0; k < 60; ++k) {
            const double contrib = term / (n + k + 1);
            sum += contrib;
            if (std::abs(contrib) < 1e-18 * std::abs(sum)) break;
            term *= -x / (k + 1);
        }
        return t_n1 * sum;
    }
    const double one_minus = -std::expm1(-x);
    const double ex = std::exp(-x);
    switch (n) {
        case 0: return one_minus / r;
        case 1: return (one_minus - x * ex) / (r * r);
        default: return (2.0 * one_minus - ex * x * (2.0 + x)) / (r * r * r);
    }
}

WelfareResult closed(double value, std::optional<double> horizon) {
    WelfareResult r;
    r.value = value;
    r.method = Method::closed_form;
    r.abs_error_estimate = 8.0 * kEps * std::abs(value);
    r.truncation_time = horizon;
    return r;
}

void require_lottery(const ScenarioSpec& spec) {
    if (!spec.lottery) throw DomainError("scenario has no lottery (p3, p4, T_delayed)");
}

double require_positive_rate(const Preferences& prefs) {
    const double r = effective_discount(prefs);
    if (!(r > 0.0)) {
        std::ostringstream msg;
        msg << "effective discount rate " << r << " is not positive; welfare diverges";
        throw DivergenceError(msg.str());
    }
    return r;
}

double quadrature_scale(double rate, double theta_rra, double growth) {
    const double net = rate - std::max(0.0, 1.0 - theta_rra) * growth;
    if (!(net > 0.0)) {
        throw DivergenceError("discounted utility growth is not negative; welfare diverges");
    }
    return kScaleFraction * net;
}

}  // namespace

void ScenarioSpec::validate() const {
    if (!(c0 >= 1.0) || !std::isfinite(c0))
        throw DomainError("c0 = " + std::to_string(c0) + " must be >= 1");
    if (!(g_baseline >= 0.0) || !std::isfinite(g_baseline))
        throw DomainError("g_baseline must be >= 0");
    if (!(g_ai >= 0.0) || !std::isfinite(g_ai)) throw DomainError("g_ai must be >= 0");
    prefs.validate();
    xrisk::validate(hazard);
    if (lottery) {
        if (!(lottery->p3 >= 0.0 && lottery->p3 <= 1.0))
            throw DomainError("lottery p3 must be in [0,1]");
        if (!(lottery->p4 >= 0.0 && lottery->p4 <= 1.0))
            throw DomainError("lottery p4 must be in [0,1]");
        if (!(lottery->T_delayed >= 0.0)) throw DomainError("lottery T_delayed must be >= 0");
    }
}

double exponential_path_welfare(double log_c0, double growth, double theta_rra, double rate,
                                double T) {
    if (!(T >= 0.0)) throw DomainError("horizon must be >= 0");
    if (T == 0.0) return 0.0;
    const bool infinite = !std::isfinite(T);
    const double a = 1.0 - theta_rra;
    if (infinite && !(rate > 0.0)) {
        throw DivergenceError("infinite-horizon welfare needs a positive discount rate");
    }

    if (std::abs(a) < 1e-8) {
        const double m0 = discounted_moment(0, rate, T);
        const double m1 = discounted_moment(1, rate, T);
        const double log_part = log_c0 * m0 + growth * m1;
        if (a == 0.0) return log_part;
        const double m2 = discounted_moment(2, rate, T);
        const double square = log_c0 * log_c0 * m0 + 2.0 * log_c0 * growth * m1 + growth * growth * m2;
        return log_part + 0.5 * a * square;
    }

    const double k = rate - a * growth;
    if (infinite) {
        if (!(k > 0.0)) {
            throw DivergenceError("discount rate does not exceed (1 - theta) * growth; welfare diverges");
        }
        // [c0^a / k - 1 / rate] / a, rearranged so nothing cancels near a = 0.
        return std::expm1(a * log_c0) / (a * k) + growth / (k * rate);
    }
    const double e_k = discounted_moment(0, k, T);
    const double e_r = discounted_moment(0, rate, T);
    return std::expm1(a * log_c0) / a * e_k + (e_k - e_r) / a;
}

WelfareResult welfare_along(const Preferences& prefs, const ConsumptionPath& path,
                            const HazardModel& hazard, const QuadratureOptions& options) {
    prefs.validate();
    xrisk::validate(hazard);
    const double rate = effective_discount(prefs);
    const double theta = prefs.theta_rra;

    double horizon = kInfiniteHorizon;
    double extra_decay = 0.0;
    bool gaussian_tail = false;
    if (const auto* one_off = std::get_if<OneOffHazard>(&hazard)) {
        horizon = one_off->t_ext;
    } else if (const auto* c = std::get_if<ConstantHazard>(&hazard)) {
        extra_decay = c->rate;
    } else if (const auto* m = std::get_if<MountingLogHazard>(&hazard)) {
        extra_decay = m->epsilon * std::log(m->c0);
        gaussian_tail = m->epsilon > 0.0 && m->growth > 0.0;
    }

    double scale;
    if (std::isfinite(horizon)) {
        const double net = rate - std::max(0.0, 1.0 - theta) * path.max_growth();
        scale = net > 0.0 ? kScaleFraction * net : 1.0 / std::max(horizon, 1.0);
    } else if (gaussian_tail) {
        const auto& m = std::get<MountingLogHazard>(hazard);
        const double net = rate + extra_decay - std::max(0.0, 1.0 - theta) * path.max_growth();
        scale = kScaleFraction * std::max(net, std::sqrt(m.epsilon * m.growth));
    } else {
        scale = quadrature_scale(rate + extra_decay, theta, path.max_growth());
    }

    auto flow = [&path, theta](double t) { return crra_utility_log(path.log_consumption(t), theta); };
    const bool one_off = std::holds_alternative<OneOffHazard>(hazard);
    auto log_weight = [&hazard, rate, one_off](double t) {
        return -rate * t + (one_off ? 0.0 : log_survival(hazard, t));
    };
    std::vector<double> breaks;
    for (const auto& seg : path.segments()) breaks.push_back(seg.start);
    return integrate_discounted(flow, log_weight, scale, horizon, options, breaks);
}

namespace {

WelfareResult path_welfare(const ScenarioSpec& spec, double growth, const HazardModel& hazard,
                           Route route, const QuadratureOptions& options) {
    spec.validate();
    xrisk::validate(hazard);
    const bool has_closed_form = !std::holds_alternative<MountingLogHazard>(hazard) &&
                                 !std::holds_alternative<SafetyGoodsHazard>(hazard);
    if (route == Route::closed_form && !has_closed_form) {
        throw DomainError("no closed form for this hazard model");
    }
    if (route == Route::quadrature || !has_closed_form) {
        return welfare_along(spec.prefs, ConsumptionPath::exponential(spec.c0, growth), hazard,
                             options);
    }

    const double log_c0 = std::log(spec.c0);
    const double theta = spec.prefs.theta_rra;
    double rate = effective_discount(spec.prefs);
    double horizon = kInfiniteHorizon;
    if (const auto* c = std::get_if<ConstantHazard>(&hazard)) rate += c->rate;
    if (const auto* o = std::get_if<OneOffHazard>(&hazard)) horizon = o->t_ext;
    const double value = exponential_path_welfare(log_c0, growth, theta, rate, horizon);
    return closed(value, std::isfinite(horizon) ? std::optional<double>(horizon) : std::nullopt);
}

}  // namespace

WelfareResult welfare_no_takeover(const ScenarioSpec& spec, Route route,
                                  const QuadratureOptions& options) {
    require_positive_rate(spec.prefs);
    return path_welfare(spec, spec.g_baseline, ZeroHazard{}, route, options);
}

WelfareResult welfare_cornucopia(const ScenarioSpec& spec, Route route,
                                 const QuadratureOptions& options) {
    require_positive_rate(spec.prefs);
    return path_welfare(spec, spec.g_ai, ZeroHazard{}, route, options);
}

WelfareResult welfare_truncated(const ScenarioSpec& spec, double T, Route route,
                                const QuadratureOptions& options) {
    if (!(T >= 0.0)) throw DomainError("extinction time T must be >= 0");
    if (!std::isfinite(T)) return welfare_cornucopia(spec, route, options);
    return path_welfare(spec, spec.g_ai, OneOffHazard{T}, route, options);
}

WelfareResult welfare_mounting(const ScenarioSpec& spec, double epsilon,
                               const QuadratureOptions& options) {
    if (!(epsilon >= 0.0)) throw DomainError("epsilon must be >= 0");
    if (epsilon == 0.0) require_positive_rate(spec.prefs);
    return path_welfare(spec, spec.g_ai, MountingLogHazard{epsilon, spec.c0, spec.g_ai},
                        Route::quadrature, options);
}

WelfareResult welfare_lottery_immediate(const ScenarioSpec& spec, Route route,
                                        const QuadratureOptions& options) {
    require_lottery(spec);
    WelfareResult w = welfare_cornucopia(spec, route, options);
    const double keep = 1.0 - spec.lottery->p3;
    w.value *= keep;
    w.abs_error_estimate *= keep;
    return w;
}

WelfareResult welfare_lottery_delayed(const ScenarioSpec& spec, Route route,
                                      const QuadratureOptions& options) {
    require_lottery(spec);
    const Lottery& lot = *spec.lottery;
    const WelfareResult wa = welfare_cornucopia(spec, route, options);
    const WelfareResult wb = welfare_truncated(spec, lot.T_delayed, route, options);
    const double w_b = (1.0 - lot.p3) * lot.p4;
    const double w_a = (1.0 - lot.p3) * (1.0 - lot.p4);
    WelfareResult out = wa;
    out.value = w_b * wb.value + w_a * wa.value;
    out.abs_error_estimate = w_b * wb.abs_error_estimate + w_a * wa.abs_error_estimate;
    out.truncation_time.reset();
    return out;
}

double lottery_long_run_survival(const Lottery& lottery) noexcept {
    return (1.0 - lottery.p3) * (1.0 - lottery.p4);
}

WelfareResult welfare_under_hazard(const ScenarioSpec& spec, Route route,
                                   const QuadratureOptions& options) {
    return path_welfare(spec, spec.g_ai, spec.hazard, route, options);
}

}  // namespace xrisk
