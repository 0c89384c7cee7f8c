#pragma once

#include <functional>
#include <optional>

namespace xrisk {

struct RootOptions {
    double rel_tol = 1e-10;  ///< on the root location
    double abs_tol = 0.0;    ///< floor for roots near zero
    int max_iterations = 200;
};

struct RootResult {
    double root = 0.0;
    double f_root = 0.0;
    int iterations = 0;
};

/// Brent's method (inverse quadratic interpolation, secant and bisection) on
/// a bracket where f(lo) and f(hi) differ in sign. Throws DomainError when not
/// bracketed and ConvergenceError after max_iterations.
RootResult brent_root(const std::function<double(double)>& f, double lo, double hi,
                      const RootOptions& options = {});

/// Same, reusing known endpoint values.
RootResult brent_root(const std::function<double(double)>& f, double lo, double hi, double f_lo,
                      double f_hi, const RootOptions& options = {});

struct Bracket {
    double lo;
    double hi;
    double f_lo;
    double f_hi;
    int evaluations;
};

/// Grows hi geometrically from `start` (factor `growth`) until f changes sign
/// relative to f(lo), or hi would pass `limit`. The returned lo is the last
/// point that kept the sign of f(lo). Empty if no sign change was
/// found within the limit.
std::optional<Bracket> expand_bracket_upward(const std::function<double(double)>& f, double lo,
                                             double f_lo, double start, double limit,
                                             double growth = 2.0);

}  // namespace xrisk
