#include "xrisk/special_functions.hpp"

#include <cmath>
#include <numbers>

#include "xrisk/errors.hpp"

namespace xrisk {

double erf(double x) noexcept { return std::erf(x); }

double erfc(double x) noexcept { return std::erfc(x); }

double erfcx(double x) {
    if (!(x >= 0.0)) throw DomainError("erfcx: argument must be >= 0");
    if (x < 4.0) return std::exp(x * x) * std::erfc(x);

    // Continued fraction erfcx(x) = (1/sqrt(pi)) / (x + (1/2)/(x + 1/(x + (3/2)/(x + ...)))),
    // evaluated with the modified Lentz method.
    constexpr double tiny = 1e-300;
    double f = x;
    double c = x;
    double d = 0.0;
    for (int k = 1; k < 500; ++k) {
        const double a = 0.5 * k;
        d = x + a * d;
        if (d == 0.0) d = tiny;
        c = x + a / c;
        if (c == 0.0) c = tiny;
        d = 1.0 / d;
        const double delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return std::numbers::inv_sqrtpi / f;
}

}  // namespace xrisk
