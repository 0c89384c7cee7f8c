#include "xrisk/roots.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "xrisk/errors.hpp"

namespace xrisk {

RootResult brent_root(const std::function<double(double)>& f, double lo, double hi,
                      const RootOptions& options) {
    return brent_root(f, lo, hi, f(lo), f(hi), options);
}

RootResult brent_root(const std::function<double(double)>& f, double lo, double hi, double f_lo,
                      double f_hi, const RootOptions& options) {
    if (f_lo == 0.0) return {lo, 0.0, 0};
    if (f_hi == 0.0) return {hi, 0.0, 0};
    if (!std::isfinite(f_lo) || !std::isfinite(f_hi) || (f_lo > 0.0) == (f_hi > 0.0)) {
        throw DomainError("brent_root: interval does not bracket a root");
    }

    double a = lo, b = hi, fa = f_lo, fb = f_hi;
    double c = a, fc = fa;
    double d = b - a, e = d;
    constexpr double eps = std::numeric_limits<double>::epsilon();

    for (int iter = 1; iter <= options.max_iterations; ++iter) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const double tol =
            2.0 * eps * std::abs(b) + 0.5 * std::max(options.rel_tol * std::abs(b), options.abs_tol);
        const double m = 0.5 * (c - b);
        if (std::abs(m) <= tol || fb == 0.0) return {b, fb, iter};

        if (std::abs(e) >= tol && std::abs(fa) > std::abs(fb)) {
            double p, q;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {
                const double qa = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * m * q - std::abs(tol * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = m;
            }
        } else {
            d = m;
            e = m;
        }
        a = b;
        fa = fb;
        b += (std::abs(d) > tol) ? d : (m > 0.0 ? tol : -tol);
        fb = f(b);
        if (!std::isfinite(fb)) throw ConvergenceError("brent_root: function returned a nonfinite value");
    }
    throw ConvergenceError("brent_root: no convergence within the iteration cap");
}

std::optional<Bracket> expand_bracket_upward(const std::function<double(double)>& f, double lo,
                                             double f_lo, double start, double limit,
                                             double growth) {
    if (!(start > lo) || !(growth > 1.0)) {
        throw DomainError("expand_bracket_upward: need start > lo and growth > 1");
    }
    int evaluations = 0;
    double hi = std::min(start, limit);
    while (true) {
        const double f_hi = f(hi);
        ++evaluations;
        if ((f_hi > 0.0) != (f_lo > 0.0) || f_hi == 0.0) return Bracket{lo, hi, f_lo, f_hi, evaluations};
        if (hi >= limit) return std::nullopt;
        lo = hi;
        f_lo = f_hi;
        hi = std::min(hi * growth, limit);
    }
}

}  // namespace xrisk
