#pragma once

namespace xrisk {

/// Error function. Absolute error below 1e-10 for finite x.
double erf(double x) noexcept;

/// Complementary error function 1 - erf(x), accurate in the upper tail.
double erfc(double x) noexcept;

/// Scaled complement exp(x^2) * erfc(x) for x >= 0. Finite where both factors
/// separately over/underflow.
double erfcx(double x);

}  // namespace xrisk
