#pragma once

#include <limits>
#include <span>
#include <variant>

namespace xrisk {

/// Planner preferences. theta_rra is risk aversion in the CRRA flow utility;
/// inequality aversion lives separately in SwfKind.
struct Preferences {
    double rho = 0.03;           ///< pure rate of time preference, per year
    double theta_rra = 1.0;      ///< coefficient of relative risk aversion
    double nu = 0.0;             ///< population-size elasticity in [0,1]
    double n_pop_growth = 0.0;   ///< population growth rate, per year
    double m_background = 0.0;   ///< constant background extinction hazard, per year

    /// Throws DomainError naming the offending field.
    void validate() const;
};

/// Single exponential discount rate used by every welfare integral:
/// rho - nu * n + m_background. May be nonpositive; callers that integrate to
/// an unbounded horizon must check.
double effective_discount(const Preferences& prefs) noexcept;

/// Rawlsian marker for ces_aggregate: the aggregate is the minimum entry.
inline constexpr double kRawlsianLimit = -std::numeric_limits<double>::infinity();

struct Benthamite {};
struct Millian {};
struct Rawlsian {};
struct Generalized {
    double theta_ineq;  ///< <= 1, or kRawlsianLimit
    double nu;          ///< in [0,1]
};
using SwfKind = std::variant<Benthamite, Millian, Rawlsian, Generalized>;

/// Every classical aggregator is a corner of the generalized one:
/// Benthamite = (1, 1), Millian = (1, 0), Rawlsian = (-inf, 0).
Generalized as_generalized(const SwfKind& kind);

/// CRRA flow utility of normalized consumption c >= 1:
/// (c^(1-theta) - 1) / (1 - theta), log c at theta = 1.
double crra_utility(double c, double theta_rra);

/// Same utility taking log c >= 0, so paths whose level overflows a double
/// still evaluate. Switches to a first-order series for |1 - theta| < 1e-8.
double crra_utility_log(double log_c, double theta_rra);

/// [sum c_i^theta]^(1/theta) for finite nonzero theta <= 1; min c_i for
/// kRawlsianLimit.
double ces_aggregate(std::span<const double> allocation, double theta_ineq);

/// Instantaneous social welfare of an allocation across N individuals:
/// N^nu * u(ces_aggregate(allocation, theta_ineq)).
double social_flow(const SwfKind& kind, std::span<const double> allocation,
                   double theta_rra);

}  // namespace xrisk
