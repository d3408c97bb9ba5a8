#pragma once

namespace diamond {

inline constexpr double kEulerGamma = 0.57721566490153286060651209;
inline constexpr double kLog2E = 1.44269504088896340735992468;

/// Exponential integral E1(x) = integral_x^inf exp(-t)/t dt, x > 0.
/// Series for x <= 1, continued fraction for x > 1; absolute error <= 1e-12.
double exp_integral_e1(double x);

}  // namespace diamond
