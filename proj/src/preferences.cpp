#include "xrisk/preferences.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "xrisk/errors.hpp"

namespace xrisk {

void Preferences::validate() const {
    auto fail = [](const char* field, double v, const char* rule) {
        throw DomainError(std::string(field) + " = " + std::to_string(v) + " must be " + rule);
    };
    if (!(rho >= 0.0) || !std::isfinite(rho)) fail("rho", rho, ">= 0");
    if (!(theta_rra >= 0.0) || !std::isfinite(theta_rra)) fail("theta_rra", theta_rra, ">= 0");
    if (!(nu >= 0.0 && nu <= 1.0)) fail("nu", nu, "in [0,1]");
    if (!std::isfinite(n_pop_growth)) fail("n_pop_growth", n_pop_growth, "finite");
    if (!(m_background >= 0.0) || !std::isfinite(m_background))
        fail("m_background", m_background, ">= 0");
}

double effective_discount(const Preferences& prefs) noexcept {
    return prefs.rho - prefs.nu * prefs.n_pop_growth + prefs.m_background;
}

Generalized as_generalized(const SwfKind& kind) {
    struct Visitor {
        Generalized operator()(Benthamite) const { return {1.0, 1.0}; }
        Generalized operator()(Millian) const { return {1.0, 0.0}; }
        Generalized operator()(Rawlsian) const { return {kRawlsianLimit, 0.0}; }
        Generalized operator()(const Generalized& g) const {
            if (!(g.theta_ineq <= 1.0))
                throw DomainError("theta_ineq = " + std::to_string(g.theta_ineq) + " must be <= 1");
            if (!(g.nu >= 0.0 && g.nu <= 1.0))
                throw DomainError("nu = " + std::to_string(g.nu) + " must be in [0,1]");
            return g;
        }
    };
    return std::visit(Visitor{}, kind);
}

double crra_utility(double c, double theta_rra) {
    if (!(c >= 1.0)) {
        throw DomainError("consumption " + std::to_string(c) +
                          " is below the subsistence normalization c >= 1");
    }
    return crra_utility_log(std::log(c), theta_rra);
}

double crra_utility_log(double log_c, double theta_rra) {
    if (!(log_c >= 0.0)) {
        throw DomainError("log consumption " + std::to_string(log_c) + " must be >= 0");
    }
    const double a = 1.0 - theta_rra;
    if (std::abs(a) < 1e-8) return log_c + 0.5 * a * log_c * log_c;
    return std::expm1(a * log_c) / a;
}

double ces_aggregate(std::span<const double> allocation, double theta_ineq) {
    if (allocation.empty()) throw DomainError("ces_aggregate: empty allocation");
    for (double c : allocation) {
        if (!(c > 0.0) || !std::isfinite(c))
            throw DomainError("ces_aggregate: entries must be positive and finite");
    }
    if (theta_ineq == kRawlsianLimit) {
        return *std::min_element(allocation.begin(), allocation.end());
    }
    if (!(theta_ineq <= 1.0) || theta_ineq == 0.0 || !std::isfinite(theta_ineq)) {
        throw DomainError("ces_aggregate: theta_ineq must be finite, nonzero and <= 1");
    }
    // log-sum-exp keeps large |theta| from under/overflowing c^theta.
    double peak = -std::numeric_limits<double>::infinity();
    for (double c : allocation) peak = std::max(peak, theta_ineq * std::log(c));
    double acc = 0.0;
    for (double c : allocation) acc += std::exp(theta_ineq * std::log(c) - peak);
    return std::exp((peak + std::log(acc)) / theta_ineq);
}

double social_flow(const SwfKind& kind, std::span<const double> allocation, double theta_rra) {
    const Generalized g = as_generalized(kind);
    const double n = static_cast<double>(allocation.size());
    return std::pow(n, g.nu) * crra_utility(ces_aggregate(allocation, g.theta_ineq), theta_rra);
}

}  // namespace xrisk
