#include "xrisk/growth.hpp"

#include <cmath>
#include <sstream>

#include "xrisk/errors.hpp"

namespace xrisk {
namespace {

void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        std::ostringstream msg;
        msg << "ProductionParams." << name << " must be positive and finite, got " << v;
        throw DomainError(msg.str());
    }
}

}  // namespace

void ProductionParams::validate() const {
    require_positive(alpha, "alpha");
    require_positive(gamma, "gamma");
    require_positive(A, "A");
    require_positive(h, "h");
    require_positive(N, "N");
    require_positive(psi, "psi");
    require_positive(chi, "chi");
    if (!(L >= 0.0) || !std::isfinite(L)) throw DomainError("ProductionParams.L must be >= 0");
    if (!(sigma < 1.0) || sigma == 0.0 || !std::isfinite(sigma))
        throw DomainError("ProductionParams.sigma must be finite, nonzero and < 1");
    if (!(share_hw > 0.0 && share_hw < 1.0)) throw DomainError("ProductionParams.share_hw must be in (0,1)");
}

double ces_production(double X, double S, double sigma, double share_hw) {
    if (!(X > 0.0) || !(S > 0.0)) throw DomainError("ces_production: inputs must be positive");
    // Factor out the larger input so X^sigma cannot overflow for sigma < 0.
    const double big = std::max(X, S);
    const double x = X / big, s = S / big;
    return big * std::pow(share_hw * std::pow(x, sigma) + (1.0 - share_hw) * std::pow(s, sigma), 1.0 / sigma);
}

double output(const ProductionParams& p, double K, double A, Regime regime) {
    if (!(K > 0.0)) throw DomainError("output: capital must be positive");
    const double X = p.alpha * K + p.L;
    const double S = regime == Regime::full_automation ? A * (p.h * p.N + p.psi * p.chi * K)
                                                       : p.gamma * A * p.h * p.N;
    return ces_production(X, S, p.sigma, p.share_hw);
}

double output(const ProductionParams& params, double K, Regime regime) {
    return output(params, K, params.A, regime);
}

double asymptotic_capital_productivity(const ProductionParams& p) {
    p.validate();
    return ces_production(1.0, p.A * p.psi * p.chi / p.alpha, p.sigma, p.share_hw);
}

Trajectory simulate(const ProductionParams& params, Regime regime, const SimulationSettings& cfg) {
    params.validate();
    if (!(cfg.dt > 0.0)) throw DomainError("simulate: dt must be positive");
    if (!(cfg.horizon > 0.0)) throw DomainError("simulate: horizon must be positive");
    if (!(cfg.K0 > 0.0)) throw DomainError("simulate: K0 must be positive");
    if (!(cfg.saving_rate >= 0.0 && cfg.saving_rate < 1.0)) throw DomainError("simulate: saving_rate must be in [0,1)");
    if (!(cfg.delta >= 0.0)) throw DomainError("simulate: delta must be >= 0");
    if (!(cfg.tech_growth >= 0.0)) throw DomainError("simulate: tech_growth must be >= 0");

    const auto steps = static_cast<std::size_t>(std::llround(cfg.horizon / cfg.dt));
    if (steps == 0) throw DomainError("simulate: horizon shorter than one step");
    const double dt = cfg.horizon / static_cast<double>(steps);

    auto tech = [&](double t) { return params.A * std::exp(cfg.tech_growth * t); };
    auto rhs = [&](double t, double K) {
        if (!(K > 0.0)) {
            std::ostringstream msg;
            msg << "simulate: capital turned nonpositive near t = " << t << "; reduce dt";
            throw DomainError(msg.str());
        }
        return cfg.saving_rate * output(params, K, tech(t), regime) - cfg.delta * K;
    };

    Trajectory tr;
    tr.regime = regime;
    tr.saving_rate = cfg.saving_rate;
    tr.delta = cfg.delta;
    tr.tech_growth = cfg.tech_growth;
    tr.times.reserve(steps + 1);
    tr.K.reserve(steps + 1);
    tr.Y.reserve(steps + 1);
    tr.C.reserve(steps + 1);

    auto record = [&](double t, double K) {
        const double Y = output(params, K, tech(t), regime);
        tr.times.push_back(t);
        tr.K.push_back(K);
        tr.Y.push_back(Y);
        tr.C.push_back((1.0 - cfg.saving_rate) * Y);
    };

    double K = cfg.K0;
    record(0.0, K);
    for (std::size_t i = 0; i < steps; ++i) {
        const double t = static_cast<double>(i) * dt;
        const double k1 = rhs(t, K);
        const double k2 = rhs(t + 0.5 * dt, K + 0.5 * dt * k1);
        const double k3 = rhs(t + 0.5 * dt, K + 0.5 * dt * k2);
        const double k4 = rhs(t + dt, K + dt * k3);
        K += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (!(K > 0.0) || !std::isfinite(K)) {
            std::ostringstream msg;
            msg << "simulate: capital left (0, inf) at t = " << t + dt << "; reduce dt";
            throw DomainError(msg.str());
        }
        record(static_cast<double>(i + 1) * dt, K);
    }
    return tr;
}

double asymptotic_growth_rate(std::span<const double> times, std::span<const double> series) {
    if (times.size() != series.size()) throw DomainError("asymptotic_growth_rate: size mismatch");
    const std::size_t n = times.size();
    const std::size_t first = n - n / 4;
    if (n / 4 < 2) throw DomainError("asymptotic_growth_rate: trajectory too short for a fit window");
    const double m = static_cast<double>(n - first);
    double mt = 0.0, my = 0.0;
    for (std::size_t i = first; i < n; ++i) {
        if (!(series[i] > 0.0)) throw DomainError("asymptotic_growth_rate: series must be positive");
        mt += times[i];
        my += std::log(series[i]);
    }
    mt /= m;
    my /= m;
    double sty = 0.0, stt = 0.0;
    for (std::size_t i = first; i < n; ++i) {
        const double dt = times[i] - mt;
        sty += dt * (std::log(series[i]) - my);
        stt += dt * dt;
    }
    return sty / stt;
}

double asymptotic_growth_rate(const Trajectory& trajectory) {
    return asymptotic_growth_rate(trajectory.times, trajectory.Y);
}

FailureModePath failure_mode_path(FailureMode mode, const FailureModeSettings& s) {
    if (!(s.switch_time >= 0.0)) throw DomainError("failure_mode_path: switch_time must be >= 0");
    if (!(s.crash_factor > 0.0 && s.crash_factor <= 1.0))
        throw DomainError("failure_mode_path: crash_factor must be in (0,1]");
    if (!(s.c0 >= 1.0)) throw DomainError("failure_mode_path: c0 must be >= 1");

    const ConsumptionPath cornucopia = ConsumptionPath::exponential(s.c0, s.g_ai);
    switch (mode) {
        case FailureMode::fm1:
            return {cornucopia, OneOffHazard{0.0}, false};
        case FailureMode::fm2:
        case FailureMode::fm3:
            return {cornucopia, OneOffHazard{s.switch_time}, false};
        case FailureMode::fm4: {
            HazardModel hazard = MountingLogHazard{s.epsilon, s.c0, s.g_ai};
            validate(hazard);
            return {cornucopia, hazard, false};
        }
        case FailureMode::fm5: {
            const double log_stop = std::log(s.c0) + s.g_ai * s.switch_time;
            const double log_crash = log_stop + std::log(s.crash_factor);
            const bool floored = log_crash < 0.0;
            std::vector<ConsumptionPath::Segment> segments;
            if (s.switch_time > 0.0) segments.push_back({0.0, std::log(s.c0), s.g_ai});
            segments.push_back({s.switch_time, floored ? 0.0 : log_crash, s.g_baseline});
            ConsumptionPath path(std::move(segments));
            HazardModel hazard = ZeroHazard{};
            if (s.post_stop_extinction) {
                if (!(*s.post_stop_extinction >= s.switch_time))
                    throw DomainError("failure_mode_path: post-stop extinction precedes t_stop");
                hazard = OneOffHazard{*s.post_stop_extinction};
            }
            return {path, hazard, floored};
        }
    }
    throw DomainError("failure_mode_path: unknown mode");
}

}  // namespace xrisk
