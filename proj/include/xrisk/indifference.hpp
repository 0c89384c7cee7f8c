#pragma once

#include <limits>
#include <string>

#include "xrisk/roots.hpp"
#include "xrisk/welfare.hpp"

namespace xrisk {

enum class OutcomeKind {
    value,             ///< indifference threshold found in the admissible domain
    no_tai_preferred,  ///< no admissible threshold makes TAI at least as good
    tai_preferred,     ///< TAI is at least as good for every admissible value
    no_solution,       ///< a threshold exists only outside the search domain
};

struct SolveOutcome {
    OutcomeKind kind = OutcomeKind::no_solution;
    double x = std::numeric_limits<double>::quiet_NaN();
    int iterations = 0;
    /// |W_risky(x) - W0| at the reported threshold; 0 for sentinels.
    double residual = 0.0;

    bool has_value() const noexcept { return kind == OutcomeKind::value; }
};

std::string to_string(OutcomeKind kind);

struct SolverOptions {
    RootOptions root;
    QuadratureOptions quadrature;
    /// Upper end of the admissible extinction-time domain, years.
    double max_time = 1e6;
    /// Linear solutions within this band outside [0,1] are clamped.
    double boundary_band = 1e-12;
    /// Smallest/largest epsilon the mounting-risk bracket may reach.
    double min_epsilon = 1e-300;
    double max_epsilon = 1e3;
};

/// Extinction date T with W_B(T) = W0.
SolveOutcome solve_extinction_time(const ScenarioSpec& spec, const SolverOptions& options = {});

/// Immediate-doom probability p3 with (1 - p3) W_A = W0.
SolveOutcome solve_p3_immediate(const ScenarioSpec& spec, const SolverOptions& options = {});

/// p3 with W_E = W0 at fixed p4 and T.
SolveOutcome solve_p3_delayed(const ScenarioSpec& spec, double p4, double T,
                              const SolverOptions& options = {});

/// p4 with W_E = W0 at fixed p3 and T.
SolveOutcome solve_p4_delayed(const ScenarioSpec& spec, double p3, double T,
                              const SolverOptions& options = {});

/// Non-corrigibility date T with W_E = W0 at fixed p3, p4. A negative implied
/// T means the lottery beats no-TAI even with extinction at takeover
/// (tai_preferred); a target beyond W_A means no finite T suffices
/// (no_tai_preferred).
SolveOutcome solve_T_delayed(const ScenarioSpec& spec, double p3, double p4,
                             const SolverOptions& options = {});

/// Hazard elasticity epsilon with W_C(epsilon) = W0. Quadrature failures
/// propagate as ConvergenceError.
SolveOutcome solve_epsilon_mounting(const ScenarioSpec& spec, const SolverOptions& options = {});

}  // namespace xrisk
