#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <vector>

namespace xrisk {

struct QuadratureOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    /// Bisection depth of the adaptive rule; 13 levels bound the work at
    /// 2^13 leaf intervals.
    unsigned max_depth = 13;
};

enum class Method { closed_form, quadrature };

/// Value of a discounted integral with provenance.
struct WelfareResult {
    double value = 0.0;
    Method method = Method::closed_form;
    double abs_error_estimate = 0.0;
    /// Finite upper limit of integration; empty for [0, inf).
    std::optional<double> truncation_time;
};

inline constexpr double kInfiniteHorizon = std::numeric_limits<double>::infinity();

/// Transform rate as a fraction of the integrand's decay rate. The mapped
/// integrand then vanishes like (1 - x)^3 at x = 1, smooth enough for GK31.
inline constexpr double kScaleFraction = 0.25;

/// Adaptive quadrature of  integral_0^horizon flow(t) * exp(log_weight(t)) dt.
///
/// `log_weight` is the log of discount times survival; passing the log keeps
/// far-tail weights representable. The time axis is mapped to x in [0, 1)
/// by t = -ln(1 - x) / scale_rate, so the integrand seen by the rule is
/// flow(t) * exp(log_weight(t) + scale_rate * t) / scale_rate. Pick
/// scale_rate below the integrand's decay rate, e.g. kScaleFraction of it.
///
/// Interior `breakpoints` (times where the integrand jumps or kinks) split the
/// range into separately integrated pieces; points outside (0, horizon) are ignored.
///
/// Throws ConvergenceError if the error estimate exceeds
/// max(abs_tol, rel_tol * |value|) once the subdivision budget is spent.
WelfareResult integrate_discounted(const std::function<double(double)>& flow,
                                   const std::function<double(double)>& log_weight,
                                   double scale_rate, double horizon = kInfiniteHorizon,
                                   const QuadratureOptions& options = {},
                                   const std::vector<double>& breakpoints = {});

}  // namespace xrisk
