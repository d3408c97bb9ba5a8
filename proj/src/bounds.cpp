#include "diamond/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "diamond/rng.hpp"

namespace diamond {

double miso_cut_value(const MassPointDistribution& dist, double rho_rd1_sq, double rho_rd2_sq, int T) {
    dist.validate();
    double acc = 0.0;
    for (const auto& pt : dist.points) {
        const double lin = rho_rd2_sq * pt.a2 + rho_rd1_sq * pt.b2 + rho_rd1_sq * pt.c2;
        const double cross = rho_rd1_sq * rho_rd2_sq * pt.c2 * pt.a2;
        acc += pt.p * (T * std::log2(lin + T) - std::log2(lin + cross + 1.0));
    }
    return acc;
}

double parallel_cut_value(const MassPointDistribution& dist, double rho_rd1_sq, double rho_rd2_sq, int T) {
    dist.validate();
    double acc = 0.0;
    for (const auto& pt : dist.points) {
        const double lin = rho_rd2_sq * pt.a2 + rho_rd1_sq * pt.b2 + rho_rd1_sq * pt.c2;
        const double cross = rho_rd1_sq * rho_rd2_sq * pt.c2 * pt.a2;
        acc += pt.p * (std::log2(rho_rd2_sq * pt.a2 + rho_rd1_sq * pt.b2 + 1.0) +
                       (T - 1) * std::log2(rho_rd1_sq * pt.c2 + (T - 1)) -
                       std::log2(lin + cross + 1.0));
    }
    return acc;
}

double cutset_objective(const MassPointDistribution& dist, const NetworkParams& params) {
    params.validate();
    const int T = params.T;
    const double tol = 1e-9 * (1.0 + T);
    if (dist.mean_a2() > T + tol || dist.mean_b2_plus_c2() > T + tol)
        throw std::invalid_argument("cutset_objective: distribution violates the power budget");
    const LinkStrengths rho = link_strengths(params);
    const double v1 = miso_cut_value(dist, rho.rho_rd1_sq, rho.rho_rd2_sq, T);
    const double v2 = (T - 1) * std::log2(rho.rho_sr2_sq) +
                      parallel_cut_value(dist, rho.rho_rd1_sq, rho.rho_rd2_sq, T);
    return std::min(v1, v2);
}

RateReport tsqmf_rate_bound(const NetworkParams& params, double p_lambda, double c_r12_sq) {
    params.validate();
    if (!(p_lambda >= 0.0 && p_lambda <= 1.0))
        throw std::invalid_argument("tsqmf_rate_bound: p_lambda must be in [0,1]");
    if (!(c_r12_sq >= 0.0))
        throw std::invalid_argument("tsqmf_rate_bound: c_r12_sq must be >= 0");

    const double snr = params.snr_value();
    const double L = std::log2(snr);
    const double Tm1 = params.T - 1;
    const double Tm2 = params.T - 2;
    const double quant = std::log2(c_r12_sq * std::pow(snr, params.gamma_rd1) + 1.0);

    RateReport rep;
    rep.snr = snr;
    rep.terms.emplace_back("cap", Tm1 * params.gamma_sr1 * L);
    rep.terms.emplace_back("parallel", Tm1 * params.gamma_sr2 * L +
                                           (1.0 - p_lambda) * Tm1 * params.gamma_rd1 * L +
                                           p_lambda * Tm2 * quant);
    rep.terms.emplace_back("miso", (1.0 - p_lambda) * Tm1 * params.gamma_rd1 * L +
                                       p_lambda * Tm1 * params.gamma_rd2 * L - p_lambda * quant);
    double best = rep.terms.front().second;
    rep.binding = rep.terms.front().first;
    for (const auto& [name, value] : rep.terms) {
        if (value < best) {
            best = value;
            rep.binding = name;
        }
    }
    rep.rate_per_symbol = best / params.T;
    return rep;
}

MisoEntropyResult miso_cond_entropy(double a1_sq, double a2_sq, double rho11_sq,
                                    double rho12_sq, int T, const McConfig& mc) {
    if (a1_sq < 0 || a2_sq < 0 || rho11_sq < 0 || rho12_sq < 0)
        throw std::invalid_argument("miso_cond_entropy: negative power");
    if (T < 2) throw std::invalid_argument("miso_cond_entropy: requires T >= 2");
    mc.validate();

    const double s1 = rho11_sq * a1_sq;
    const double s2 = rho12_sq * a2_sq;
    const std::uint64_t seed1 = rng::substream(mc.seed, 0x11);
    const std::uint64_t seed2 = rng::substream(mc.seed, 0x12);
    const std::uint64_t n = static_cast<std::uint64_t>(T);

    // det(I + s1 X1'X1 + s2 X2'X2) = (1+s1|X1|^2)(1+s2|X2|^2) - s1 s2 |<X1,X2>|^2
    const McEstimate est = mc_estimate(mc, [&](std::uint64_t i) {
        double n1 = 0.0, n2 = 0.0;
        cplx inner = 0.0;
        for (std::uint64_t k = 0; k < n; ++k) {
            const cplx x1 = cgauss_at(1.0, seed1, i * n + k);
            const cplx x2 = cgauss_at(1.0, seed2, i * n + k);
            n1 += std::norm(x1);
            n2 += std::norm(x2);
            inner += std::conj(x1) * x2;
        }
        const double det = (1.0 + s1 * n1) * (1.0 + s2 * n2) - s1 * s2 * std::norm(inner);
        return std::log2(det);
    });

    MisoEntropyResult out;
    out.mc_value = est.mean;
    out.std_error = est.std_error;
    out.closed_bound = std::log2((1.0 + s1) * (1.0 + s2));
    return out;
}

namespace {

// Determinant by Gaussian elimination with partial pivoting; the matrices
// here are Hermitian positive definite and tiny.
cplx complex_det(std::vector<std::vector<cplx>> m) {
    const std::size_t n = m.size();
    cplx det = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
        if (std::abs(m[piv][col]) == 0.0) return 0.0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            const cplx f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

}  // namespace

LogdetCheckResult logdet_identity_check(int M, int T, std::uint64_t seed, int draws) {
    if (!(T > M && M >= 1)) throw std::invalid_argument("logdet_identity_check: need T > M >= 1");
    if (draws < 1) throw std::invalid_argument("logdet_identity_check: draws must be >= 1");

    LogdetCheckResult out;
    out.draws = draws;
    const std::uint64_t lseed = rng::substream(seed, 0x21);
    const std::uint64_t dseed = rng::substream(seed, 0x22);
    std::uint64_t ctr = 0;

    for (int d = 0; d < draws; ++d) {
        // L: M x T lower triangular, columns beyond M identically zero.
        std::vector<std::vector<cplx>> L(M, std::vector<cplx>(T, 0.0));
        for (int i = 0; i < M; ++i)
            for (int j = 0; j <= i; ++j) L[i][j] = cgauss_at(1.0, lseed, ctr++);
        std::vector<double> diag(M);
        for (int i = 0; i < M; ++i)
            diag[i] = 0.05 + 10.0 * rng::uniform(dseed, ctr++);

        // Full T x T form: I_T + L^H D L.
        std::vector<std::vector<cplx>> big(T, std::vector<cplx>(T, 0.0));
        for (int r = 0; r < T; ++r) big[r][r] = 1.0;
        for (int r = 0; r < T; ++r)
            for (int c = 0; c < T; ++c)
                for (int k = 0; k < M; ++k)
                    big[r][c] += std::conj(L[k][r]) * diag[k] * L[k][c];

        // Reduced M x M form: I_M + L_M^H D L_M.
        std::vector<std::vector<cplx>> small(M, std::vector<cplx>(M, 0.0));
        for (int r = 0; r < M; ++r) small[r][r] = 1.0;
        for (int r = 0; r < M; ++r)
            for (int c = 0; c < M; ++c)
                for (int k = 0; k < M; ++k)
                    small[r][c] += std::conj(L[k][r]) * diag[k] * L[k][c];

        const double lhs = complex_det(big).real();
        const double rhs = complex_det(small).real();
        const double rel = std::fabs(lhs - rhs) / std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
        out.max_rel_err = std::max(out.max_rel_err, rel);
    }
    out.pass = out.max_rel_err < 1e-9;
    return out;
}

}  // namespace diamond
