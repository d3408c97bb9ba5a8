#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "diamond/params.hpp"
#include "diamond/rng.hpp"
#include "diamond/special.hpp"

using namespace diamond;

namespace {

// Adaptive Simpson quadrature of exp(-t)/t on [x, x+60]; the truncated tail
// is below 1e-26 for x >= 0.1. Independent oracle for E1.
double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double integrand(double t) { return std::exp(-t) / t; }

double adaptive(double a, double b, double fa, double fm, double fb, double whole, double eps,
                int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = integrand(lm), frm = integrand(rm);
    const double left = simpson(a, m, fa, flm, fm);
    const double right = simpson(m, b, fm, frm, fb);
    if (depth <= 0 || std::fabs(left + right - whole) < 15.0 * eps)
        return left + right + (left + right - whole) / 15.0;
    return adaptive(a, m, fa, flm, fm, left, eps / 2.0, depth - 1) +
           adaptive(m, b, fm, frm, fb, right, eps / 2.0, depth - 1);
}

double e1_quadrature(double x) {
    const double a = x, b = x + 60.0;
    const double fa = integrand(a), fb = integrand(b), fm = integrand(0.5 * (a + b));
    return adaptive(a, b, fa, fm, fb, simpson(a, b, fa, fm, fb), 1e-14, 48);
}

double ks_statistic_vs_exponential(std::vector<double> xs, double mean) {
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    double d = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double cdf = -std::expm1(-xs[i] / mean);
        d = std::max(d, std::fabs(cdf - (i + 1) / n));
        d = std::max(d, std::fabs(cdf - i / n));
    }
    return d;
}

double ks_two_sample(std::vector<double> a, std::vector<double> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double d = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] <= b[j]) ++i;
        else ++j;
        d = std::max(d, std::fabs(i / static_cast<double>(a.size()) -
                                  j / static_cast<double>(b.size())));
    }
    return d;
}

}  // namespace

TEST_CASE("complex gaussian sampling") {
    SUBCASE("zero variance collapses to exact zeros") {
        const auto zs = sample_cgauss(0.0, 5, 13);
        for (const auto& z : zs) CHECK(z == cplx{0.0, 0.0});
    }
    SUBCASE("mean square matches the variance") {
        const std::size_t n = 1'000'000;
        const auto zs = sample_cgauss(4.0, n, 2024);
        double acc = 0.0;
        for (const auto& z : zs) acc += std::norm(z);
        const double mean_sq = acc / n;
        const double se = 4.0 / std::sqrt(static_cast<double>(n));  // |z|^2 ~ Exp(4)
        CHECK(std::fabs(mean_sq - 4.0) < 3.0 * se);
    }
    SUBCASE("deterministic for a fixed seed") {
        const auto a = sample_cgauss(1.0, 3, 7);
        const auto b = sample_cgauss(1.0, 3, 7);
        CHECK(a == b);
    }
    SUBCASE("modulus squared is exponential (KS at desk scale)") {
        const std::size_t n = 10'000;
        const auto zs = sample_cgauss(2.5, n, 99);
        std::vector<double> sq(n);
        for (std::size_t i = 0; i < n; ++i) sq[i] = std::norm(zs[i]);
        const double d = ks_statistic_vs_exponential(std::move(sq), 2.5);
        CHECK(d < 1.63 / std::sqrt(static_cast<double>(n)));  // alpha = 0.01
    }
    SUBCASE("negative variance rejected") {
        CHECK_THROWS_AS(sample_cgauss(-1.0, 1, 0), std::invalid_argument);
    }
}

TEST_CASE("exponential integral") {
    CHECK(std::fabs(exp_integral_e1(1.0) - 0.219384) < 1e-6);

    SUBCASE("agrees with quadrature of the defining integral") {
        for (const double x : {0.1, 0.25, 0.5, 0.9, 1.0, 1.5, 2.0, 5.0, 10.0, 30.0}) {
            CHECK(std::fabs(exp_integral_e1(x) - e1_quadrature(x)) < 1e-12);
        }
    }
    SUBCASE("monotone decreasing") { CHECK(exp_integral_e1(2.0) < exp_integral_e1(1.0)); }
    SUBCASE("log sandwich") {
        for (double x = 0.01; x < 50.0; x *= 1.7) {
            const double v = exp_integral_e1(x);
            CHECK(v <= std::exp(-x) * std::log1p(1.0 / x) + 1e-15);
            CHECK(v >= 0.5 * std::exp(-x) * std::log1p(2.0 / x) - 1e-15);
        }
    }
    SUBCASE("domain error outside x > 0") {
        CHECK_THROWS_AS(exp_integral_e1(0.0), std::domain_error);
        CHECK_THROWS_AS(exp_integral_e1(-2.0), std::domain_error);
    }
}

TEST_CASE("isotropic unit vectors") {
    SUBCASE("dim 1 is a pure phasor") {
        const auto v = sample_isotropic_unit_vector(1, 5);
        CHECK(std::fabs(std::abs(v[0]) - 1.0) < 1e-12);
    }
    SUBCASE("unit norm for every sample") {
        for (std::uint64_t i = 0; i < 200; ++i) {
            const auto v = sample_isotropic_unit_vector(6, 17, i);
            double norm_sq = 0.0;
            for (const auto& z : v) norm_sq += std::norm(z);
            CHECK(std::fabs(std::sqrt(norm_sq) - 1.0) < 1e-12);
        }
    }
    SUBCASE("coordinates share the energy; invariant under a fixed rotation") {
        const std::size_t dim = 4, n = 100'000;
        // Fixed non-axis-aligned unitary built by Gram-Schmidt.
        std::vector<std::vector<cplx>> U(dim, std::vector<cplx>(dim));
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c)
                U[r][c] = cgauss_at(1.0, 0xDEAD, r * dim + c);
        for (std::size_t r = 0; r < dim; ++r) {
            for (std::size_t p = 0; p < r; ++p) {
                cplx dot = 0.0;
                for (std::size_t c = 0; c < dim; ++c) dot += std::conj(U[p][c]) * U[r][c];
                for (std::size_t c = 0; c < dim; ++c) U[r][c] -= dot * U[p][c];
            }
            double nn = 0.0;
            for (std::size_t c = 0; c < dim; ++c) nn += std::norm(U[r][c]);
            for (std::size_t c = 0; c < dim; ++c) U[r][c] /= std::sqrt(nn);
        }

        std::vector<double> coord_raw(dim, 0.0);
        double rotated_first = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const auto v = sample_isotropic_unit_vector(dim, 31, i);
            for (std::size_t k = 0; k < dim; ++k) coord_raw[k] += std::norm(v[k]);
            cplx first = 0.0;
            for (std::size_t c = 0; c < dim; ++c) first += U[0][c] * v[c];
            rotated_first += std::norm(first);
        }
        // |v_k|^2 ~ Beta(1, dim-1): variance 3/80 at dim 4.
        const double se = std::sqrt(0.0375 / static_cast<double>(n));
        for (std::size_t k = 0; k < dim; ++k)
            CHECK(std::fabs(coord_raw[k] / n - 0.25) < 3.0 * se);
        CHECK(std::fabs(rotated_first / n - 0.25) < 3.0 * se);
    }
    SUBCASE("zero dimension rejected") {
        CHECK_THROWS_AS(sample_isotropic_unit_vector(0, 1), std::invalid_argument);
    }
}

TEST_CASE("half chi-squared sampling") {
    SUBCASE("moment oracle at dof = 2T, T = 3") {
        const std::size_t n = 1'000'000;
        const auto xs = sample_half_chisq(6, n, 44);
        double acc = 0.0;
        for (const double x : xs) {
            CHECK(x >= 0.0);
            acc += x;
        }
        const double se = std::sqrt(3.0 / static_cast<double>(n));
        CHECK(std::fabs(acc / n - 3.0) < 3.0 * se);
    }
    SUBCASE("matches a sum of complex gaussian squares (two-sample KS)") {
        const std::size_t n = 10'000;
        const int T = 3;
        auto a = sample_half_chisq(2 * T, n, 5);
        std::vector<double> b(n);
        const auto zs = sample_cgauss(1.0, n * T, 6);
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (int l = 0; l < T; ++l) s += std::norm(zs[i * T + l]);
            b[i] = s;
        }
        const double d = ks_two_sample(std::move(a), std::move(b));
        CHECK(d < 1.63 * std::sqrt(2.0 / static_cast<double>(n)));
    }
    SUBCASE("odd dof rejected") {
        CHECK_THROWS_AS(sample_half_chisq(5, 1, 0), std::invalid_argument);
    }
}

TEST_CASE("chunked estimation is bit-identical for any thread count") {
    auto work = [](std::uint64_t i) { return std::norm(cgauss_at(2.0, 77, i)); };
    McConfig serial{100'000, 77, 1024, 1};
    McConfig parallel{100'000, 77, 1024, 4};
    const McEstimate a = mc_estimate(serial, work);
    const McEstimate b = mc_estimate(parallel, work);
    CHECK(a.mean == b.mean);
    CHECK(a.std_error == b.std_error);
}

TEST_CASE("parameter validation") {
    NetworkParams p{3, 4, 1, 2, 3, std::nullopt};
    CHECK_NOTHROW(p.validate());
    p.T = 0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p.T = 3;
    p.gamma_rd1 = -0.5;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p.gamma_rd1 = 2;
    p.snr = 0.5;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p.snr = 100.0;
    CHECK_NOTHROW(p.validate());
    CHECK(p.rho_sr1_sq() == doctest::Approx(1e8));
}
