#include "xrisk/indifference.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "xrisk/errors.hpp"

namespace xrisk {
namespace {

SolveOutcome sentinel(OutcomeKind kind) {
    SolveOutcome out;
    out.kind = kind;
    return out;
}

SolveOutcome value_outcome(double x, int iterations, double residual) {
    SolveOutcome out;
    out.kind = OutcomeKind::value;
    out.x = x;
    out.iterations = iterations;
    out.residual = residual;
    return out;
}

/// Maps a linear solution for a probability onto the outcome tags. `risky`
/// evaluates the risky welfare at a probability for the residual.
template <class Risky>
SolveOutcome classify_probability(double p, double w0, double band, bool decreasing, Risky risky) {
    if (!std::isfinite(p)) return sentinel(OutcomeKind::no_solution);
    // For welfare decreasing in p: p < 0 means even p = 0 falls short of W0.
    if (p < -band) return sentinel(decreasing ? OutcomeKind::no_tai_preferred : OutcomeKind::tai_preferred);
    if (p > 1.0 + band) return sentinel(decreasing ? OutcomeKind::tai_preferred : OutcomeKind::no_tai_preferred);
    const double clamped = std::clamp(p, 0.0, 1.0);
    return value_outcome(clamped, 0, std::abs(risky(clamped) - w0));
}

double residual_tolerance(double w0) { return 1e-8 * std::max(1.0, std::abs(w0)); }

void check_residual(const SolveOutcome& out, double w0, const char* what) {
    if (out.has_value() && !(out.residual <= residual_tolerance(w0))) {
        std::ostringstream msg;
        msg << what << ": residual " << out.residual << " exceeds " << residual_tolerance(w0);
        throw ConvergenceError(msg.str());
    }
}

/// Root of W_B(T) = target on [0, max_time], with 0 <= target < W_A.
/// `weight` converts the W_B gap into a gap in the risky welfare.
SolveOutcome solve_truncation_for(const ScenarioSpec& spec, double target,
                                  const SolverOptions& options, double weight) {
    auto f = [&](double T) { return welfare_truncated(spec, T, Route::automatic, options.quadrature).value - target; };
    const double f0 = -target;
    if (f0 >= 0.0) return value_outcome(0.0, 0, weight * std::abs(target));
    const double start = std::min(1.0 / effective_discount(spec.prefs), options.max_time);
    const auto bracket = expand_bracket_upward(f, 0.0, f0, start, options.max_time);
    if (!bracket) return sentinel(OutcomeKind::no_solution);
    const RootResult root = brent_root(f, bracket->lo, bracket->hi, bracket->f_lo, bracket->f_hi, options.root);
    return value_outcome(root.root, root.iterations + bracket->evaluations, weight * std::abs(root.f_root));
}

}  // namespace

std::string to_string(OutcomeKind kind) {
    switch (kind) {
        case OutcomeKind::value: return "VALUE";
        case OutcomeKind::no_tai_preferred: return "NO_TAI_PREFERRED";
        case OutcomeKind::tai_preferred: return "TAI_PREFERRED";
        case OutcomeKind::no_solution: return "NO_SOLUTION";
    }
    return "UNKNOWN";
}

SolveOutcome solve_extinction_time(const ScenarioSpec& spec, const SolverOptions& options) {
    const double w0 = welfare_no_takeover(spec).value;
    const double wa = welfare_cornucopia(spec).value;
    if (w0 <= 0.0) return value_outcome(0.0, 0, std::abs(w0));
    if (wa <= w0) return sentinel(OutcomeKind::no_tai_preferred);
    SolveOutcome out = solve_truncation_for(spec, w0, options, 1.0);
    check_residual(out, w0, "solve_extinction_time");
    return out;
}

SolveOutcome solve_p3_immediate(const ScenarioSpec& spec, const SolverOptions& options) {
    const double w0 = welfare_no_takeover(spec).value;
    const double wa = welfare_cornucopia(spec).value;
    if (!(wa > 0.0)) throw DomainError("solve_p3_immediate: requires W_A > 0");
    const double p = 1.0 - w0 / wa;
    SolveOutcome out = classify_probability(p, w0, options.boundary_band, true,
                                            [wa](double q) { return (1.0 - q) * wa; });
    check_residual(out, w0, "solve_p3_immediate");
    return out;
}

SolveOutcome solve_p3_delayed(const ScenarioSpec& spec, double p4, double T,
                              const SolverOptions& options) {
    if (!(p4 >= 0.0 && p4 <= 1.0)) throw DomainError("p4 must be in [0,1]");
    const double w0 = welfare_no_takeover(spec).value;
    const double wa = welfare_cornucopia(spec).value;
    const double wb = welfare_truncated(spec, T).value;
    const double survivor = p4 * wb + (1.0 - p4) * wa;
    if (!(survivor > 0.0)) {
        return sentinel(w0 > 0.0 ? OutcomeKind::no_tai_preferred : OutcomeKind::tai_preferred);
    }
    const double p = 1.0 - w0 / survivor;
    SolveOutcome out = classify_probability(p, w0, options.boundary_band, true,
                                            [survivor](double q) { return (1.0 - q) * survivor; });
    check_residual(out, w0, "solve_p3_delayed");
    return out;
}

SolveOutcome solve_p4_delayed(const ScenarioSpec& spec, double p3, double T,
                              const SolverOptions& options) {
    if (!(p3 >= 0.0 && p3 <= 1.0)) throw DomainError("p3 must be in [0,1]");
    const double w0 = welfare_no_takeover(spec).value;
    const double wa = welfare_cornucopia(spec).value;
    const double wb = welfare_truncated(spec, T).value;
    const double keep = 1.0 - p3;
    const double gap = wa - wb;
    if (!(gap > 0.0) || keep == 0.0) {
        // W_E does not depend on p4.
        return sentinel(keep * wa >= w0 ? OutcomeKind::tai_preferred : OutcomeKind::no_tai_preferred);
    }
    const double p = (wa - w0 / keep) / gap;
    SolveOutcome out = classify_probability(p, w0, options.boundary_band, true, [=](double q) {
        return keep * (q * wb + (1.0 - q) * wa);
    });
    check_residual(out, w0, "solve_p4_delayed");
    return out;
}

SolveOutcome solve_T_delayed(const ScenarioSpec& spec, double p3, double p4,
                             const SolverOptions& options) {
    if (!(p3 >= 0.0 && p3 <= 1.0)) throw DomainError("p3 must be in [0,1]");
    if (!(p4 >= 0.0 && p4 <= 1.0)) throw DomainError("p4 must be in [0,1]");
    const double w0 = welfare_no_takeover(spec).value;
    const double wa = welfare_cornucopia(spec).value;
    const double keep = 1.0 - p3;
    if (p4 == 0.0 || keep == 0.0) {
        return sentinel(keep * wa >= w0 ? OutcomeKind::tai_preferred : OutcomeKind::no_tai_preferred);
    }
    // (1 - p3) [p4 W_B(T) + (1 - p4) W_A] = W0  <=>  W_B(T) = target
    const double target = (w0 / keep - (1.0 - p4) * wa) / p4;
    const double band = options.boundary_band * std::max(1.0, std::abs(wa));
    if (target < -band) return sentinel(OutcomeKind::tai_preferred);
    if (target >= wa) return sentinel(OutcomeKind::no_tai_preferred);
    SolveOutcome out = solve_truncation_for(spec, std::max(target, 0.0), options, keep * p4);
    check_residual(out, w0, "solve_T_delayed");
    return out;
}

SolveOutcome solve_epsilon_mounting(const ScenarioSpec& spec, const SolverOptions& options) {
    const double w0 = welfare_no_takeover(spec).value;
    const double wa = welfare_cornucopia(spec).value;
    if (wa <= w0) return sentinel(OutcomeKind::no_tai_preferred);

    int evaluations = 0;
    auto f = [&](double eps) {
        ++evaluations;
        return welfare_mounting(spec, eps, options.quadrature).value - w0;
    };
    const double f_zero = wa - w0;
    const auto upward = expand_bracket_upward(f, 0.0, f_zero, std::min(1e-3, options.max_epsilon),
                                              options.max_epsilon);
    if (!upward) return sentinel(OutcomeKind::no_solution);

    // Tighten from below so tiny roots are found in a [x, 2x] bracket.
    double lo = upward->lo, hi = upward->hi, f_lo = upward->f_lo, f_hi = upward->f_hi;
    while (lo == 0.0) {
        const double mid = 0.5 * hi;
        if (mid < options.min_epsilon) break;
        const double f_mid = f(mid);
        if (f_mid > 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
            f_hi = f_mid;
            if (f_mid == 0.0) lo = mid;
        }
    }
    const RootResult root = brent_root(f, lo, hi, f_lo, f_hi, options.root);
    SolveOutcome out = value_outcome(root.root, root.iterations + evaluations, std::abs(root.f_root));
    check_residual(out, w0, "solve_epsilon_mounting");
    return out;
}

}  // namespace xrisk
