#include "diamond/special.hpp"

#include <cmath>
#include <stdexcept>

namespace diamond {

namespace {

// E1(x) = -gamma - ln(x) + sum_{k>=1} (-1)^{k+1} x^k / (k * k!), fast for x <= 1.
double e1_series(double x) {
    double sum = -kEulerGamma - std::log(x);
    double term = 1.0;  // x^k / k!
    for (int k = 1; k <= 60; ++k) {
        term *= x / k;
        const double add = (k % 2 == 1 ? term : -term) / k;
        sum += add;
        if (std::fabs(add) < 1e-17 * std::fabs(sum) + 1e-300) break;
    }
    return sum;
}

// Continued fraction E1(x) = e^{-x} / (x + 1 - 1/(x + 3 - 4/(x + 5 - ...))),
// evaluated with the modified Lentz algorithm.
double e1_contfrac(double x) {
    const double tiny = 1e-300;
    double b = x + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int k = 1; k <= 200; ++k) {
        const double a = -static_cast<double>(k) * k;
        b += 2.0;
        d = a * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + a / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = c * d;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-16) break;
    }
    return h * std::exp(-x);
}

}  // namespace

double exp_integral_e1(double x) {
    if (!(x > 0.0)) throw std::domain_error("exp_integral_e1: x must be > 0");
    if (x > 700.0) return 0.0;  // below double underflow of e^{-x}
    return x <= 1.0 ? e1_series(x) : e1_contfrac(x);
}

}  // namespace diamond
