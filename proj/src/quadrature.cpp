#include "xrisk/quadrature.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <sstream>

#include "xrisk/errors.hpp"

namespace xrisk {

WelfareResult integrate_discounted(const std::function<double(double)>& flow,
                                   const std::function<double(double)>& log_weight,
                                   double scale_rate, double horizon,
                                   const QuadratureOptions& options,
                                   const std::vector<double>& breakpoints) {
    if (!(scale_rate > 0.0) || !std::isfinite(scale_rate))
        throw DomainError("integrate_discounted: scale_rate must be positive and finite");
    if (!(horizon >= 0.0)) throw DomainError("integrate_discounted: horizon must be >= 0");
    if (!(options.abs_tol > 0.0) || !(options.rel_tol > 0.0))
        throw DomainError("integrate_discounted: tolerances must be positive");

    WelfareResult result;
    result.method = Method::quadrature;
    if (std::isfinite(horizon)) result.truncation_time = horizon;
    if (horizon == 0.0) return result;

    const double x_max = std::isfinite(horizon) ? -std::expm1(-scale_rate * horizon) : 1.0;
    auto integrand = [&](double x) -> double {
        const double t = -std::log1p(-x) / scale_rate;
        const double lw = log_weight(t);
        if (lw == -std::numeric_limits<double>::infinity()) return 0.0;
        const double f = flow(t);
        if (f == 0.0) return 0.0;
        return f * std::exp(lw + scale_rate * t) / scale_rate;
    };

    std::vector<double> edges{0.0};
    for (double b : breakpoints) {
        if (b > 0.0 && b < horizon) edges.push_back(-std::expm1(-scale_rate * b));
    }
    std::sort(edges.begin(), edges.end());
    edges.push_back(x_max);

    double value = 0.0;
    double error = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        if (!(edges[i + 1] > edges[i])) continue;
        double piece_error = 0.0;
        value += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
            integrand, edges[i], edges[i + 1], options.max_depth, options.rel_tol, &piece_error);
        error += piece_error;
    }

    if (!std::isfinite(value)) {
        throw ConvergenceError("integrate_discounted: integrand produced a nonfinite value");
    }
    const double allowed = std::max(options.abs_tol, options.rel_tol * std::abs(value));
    if (error > allowed) {
        std::ostringstream msg;
        msg << "integrate_discounted: error estimate " << error << " exceeds tolerance " << allowed
            << " after the subdivision budget";
        throw ConvergenceError(msg.str());
    }
    result.value = value;
    result.abs_error_estimate = error;
    return result;
}

}  // namespace xrisk
