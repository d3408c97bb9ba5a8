#include "diamond/mclab.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "diamond/special.hpp"

namespace diamond {

LemmaReport finalize_report(LemmaReport rep) {
    const double slack = 3.0 * rep.std_error;
    rep.pass = rep.bound_lo - slack <= rep.lhs_estimate &&
               rep.lhs_estimate <= rep.bound_hi + slack;
    return rep;
}

LemmaReport mc_jensen_exponential(double a, double b, double mu, const McConfig& mc) {
    if (a < 0 || !(b > 0) || !(mu > 0))
        throw std::invalid_argument("mc_jensen_exponential: need a >= 0, b > 0, mu > 0");
    const std::uint64_t seed = rng::substream(mc.seed, 0x31);
    const McEstimate est = mc_estimate(mc, [&](std::uint64_t i) {
        const double xi = -mu * std::log(rng::uniform(seed, i));
        return std::log2(a + b * xi);
    });
    LemmaReport rep;
    rep.lemma_id = "jensen_exponential";
    rep.lhs_estimate = est.mean;
    rep.std_error = est.std_error;
    rep.samples = est.samples;
    rep.bound_hi = std::log2(a + b * mu);
    rep.bound_lo = rep.bound_hi - kEulerGamma * kLog2E;
    return finalize_report(rep);
}

LemmaReport mc_jensen_chisq(double a, double b, int dof, const McConfig& mc) {
    if (a < 0 || !(b > 0)) throw std::invalid_argument("mc_jensen_chisq: need a >= 0, b > 0");
    if (dof < 2 || dof % 2 != 0)
        throw std::invalid_argument("mc_jensen_chisq: dof must be even and >= 2");
    const std::uint64_t seed = rng::substream(mc.seed, 0x32);
    const McEstimate est = mc_estimate(mc, [&](std::uint64_t i) {
        const double chi2 = 2.0 * half_chisq_at(dof, seed, i);
        return std::log2(a + b * chi2);
    });
    LemmaReport rep;
    rep.lemma_id = "jensen_chisq";
    rep.lhs_estimate = est.mean;
    rep.std_error = est.std_error;
    rep.samples = est.samples;
    rep.bound_hi = std::log2(a + b * dof);
    rep.bound_lo = rep.bound_hi - 2.0 * kLog2E / dof + std::log2(1.0 + 1.0 / dof);
    return finalize_report(rep);
}

LemmaReport mc_exp_reciprocal(double b, double mu, const McConfig& mc) {
    if (!(b > 0) || !(mu > 0))
        throw std::invalid_argument("mc_exp_reciprocal: need b > 0, mu > 0");
    const std::uint64_t seed = rng::substream(mc.seed, 0x33);
    const McEstimate est = mc_estimate(mc, [&](std::uint64_t i) {
        const double xi = -mu * std::log(rng::uniform(seed, i));
        return b / (b + xi);
    });
    const double x = b / mu;
    const double analytic = x * std::exp(x) * exp_integral_e1(x);
    LemmaReport rep;
    rep.lemma_id = "exp_reciprocal";
    rep.lhs_estimate = est.mean;
    rep.std_error = est.std_error;
    rep.samples = est.samples;
    rep.bound_lo = analytic;
    rep.bound_hi = analytic;
    rep = finalize_report(rep);
    // The analytic value must itself sit in the log sandwich.
    const double lo = 0.5 * x * std::log1p(2.0 / x);
    const double hi = x * std::log1p(1.0 / x);
    if (!(lo - 1e-12 <= analytic && analytic <= hi + 1e-12)) {
        rep.pass = false;
        rep.notes = "analytic value escaped the log sandwich";
    }
    return rep;
}

ScaledNoiseReport mc_scaled_noise_ratio(double rho_sq, const McConfig& mc) {
    if (!(rho_sq > 1.0)) throw std::invalid_argument("mc_scaled_noise_ratio: need rho_sq > 1");
    const std::uint64_t seed_g = rng::substream(mc.seed, 0x41);
    const std::uint64_t seed_w = rng::substream(mc.seed, 0x42);

    const McEstimate direct = mc_estimate(mc, [&](std::uint64_t i) {
        const cplx g = cgauss_at(rho_sq, seed_g, i);
        const cplx w = cgauss_at(1.0, seed_w, i);
        return std::norm(w) / (1.0 + std::norm(g + w));
    });
    // Same mean after integrating the relative angle out analytically.
    const McEstimate angular = mc_estimate(mc, [&](std::uint64_t i) {
        const double gsq = std::norm(cgauss_at(rho_sq, seed_g, i));
        const double wsq = std::norm(cgauss_at(1.0, seed_w, i));
        const double diff = wsq - gsq;
        return wsq / std::sqrt(1.0 + 2.0 * (wsq + gsq) + diff * diff);
    });

    ScaledNoiseReport out;
    out.base.lemma_id = "scaled_noise_ratio";
    out.base.lhs_estimate = direct.mean;
    out.base.std_error = direct.std_error;
    out.base.samples = direct.samples;

    // Closed-form bound: the exact piece for |g|^2 > |w|^2 + 1, the piece for
    // |w|^2 > |g|^2 + 1, and the near-diagonal remainder.
    const double r = rho_sq;
    const double denom = (r + 1.0) * (r + 1.0);
    const double piece1 = r * exp_integral_e1(1.0 / r) / denom;
    const double piece2 = 1.0 / (1.0 + r) - r * exp_integral_e1(1.0) / denom;
    const double piece3 =
        (-std::exp(-1.0 / r) * r * r + r * r - 3.0 * r / std::exp(1.0) + 2.0 * r -
         2.0 / std::exp(1.0) + 1.0) /
        denom;
    out.closed_bound = piece1 + piece2 + piece3;

    out.base.bound_lo = 0.0;
    out.base.bound_hi = out.closed_bound;
    out.base = finalize_report(out.base);
    out.base.notes =
        "angular identity used without the 2*pi factor printed in the source derivation";

    out.second_estimate = angular.mean;
    out.second_std_error = angular.std_error;
    const double se_comb =
        3.0 * std::sqrt(direct.std_error * direct.std_error +
                        angular.std_error * angular.std_error);
    out.two_estimators_agree = std::fabs(direct.mean - angular.mean) <= se_comb;

    out.log_gap_bits = std::log2(direct.mean) - std::log2(1.0 / rho_sq);
    out.pass = out.base.pass && out.two_estimators_agree && out.log_gap_bits <= 6.0;
    return out;
}

cplx make_ghat(cplx g_plus_w) {
    if (g_plus_w == cplx{0.0, 0.0}) return cplx{1.0, 0.0};
    const double mag = std::abs(g_plus_w);
    return g_plus_w / mag + g_plus_w;
}

TsqmfBlock sim_tsqmf_block(const NetworkParams& params, double p_lambda,
                           const TsqmfCoeffs& coeffs, std::uint64_t seed,
                           std::uint64_t index) {
    params.validate();
    if (!(p_lambda >= 0.0 && p_lambda <= 1.0))
        throw std::invalid_argument("sim_tsqmf_block: p_lambda must be in [0,1]");
    const int T = params.T;
    if (T < 2) throw std::invalid_argument("sim_tsqmf_block: requires T >= 2");

    const std::uint64_t n_data = static_cast<std::uint64_t>(T - 1);
    const std::uint64_t block = rng::substream(seed, index);

    TsqmfBlock blk;
    blk.x_source.resize(n_data);
    const std::uint64_t s_src = rng::substream(block, 1);
    for (std::uint64_t l = 0; l < n_data; ++l) blk.x_source[l] = cgauss_at(1.0, s_src, l);
    // Time-sharing letter: 0 with probability p_lambda.
    blk.lambda = rng::uniform(rng::substream(block, 2), 0) <= p_lambda ? 0 : 1;

    auto relay = [&](double rho_sq, std::uint64_t tag, double amp0, double amp1) {
        TsqmfRealization r;
        const std::uint64_t s = rng::substream(block, tag);
        r.g = cgauss_at(rho_sq, rng::substream(s, 1), 0);
        r.w_pilot = cgauss_at(1.0, rng::substream(s, 2), 0);
        r.ghat = make_ghat(r.g + r.w_pilot);
        r.x_data = blk.x_source;
        r.lambda = blk.lambda;

        const std::uint64_t s_noise = rng::substream(s, 3);
        r.y_scaled.resize(n_data);
        for (std::uint64_t l = 0; l < n_data; ++l) {
            const cplx w = cgauss_at(1.0, s_noise, l);
            r.y_scaled[l] = (r.g * r.x_data[l] + w) / r.ghat;
        }
        // Backward test channel run forward: an independent copy of w/ghat.
        const cplx g_q = cgauss_at(rho_sq, rng::substream(s, 4), 0);
        const cplx w_q_pilot = cgauss_at(1.0, rng::substream(s, 5), 0);
        const cplx ghat_q = make_ghat(g_q + w_q_pilot);
        const std::uint64_t s_q = rng::substream(s, 6);
        r.y_hat.resize(n_data);
        for (std::uint64_t l = 0; l < n_data; ++l)
            r.y_hat[l] = r.y_scaled[l] + cgauss_at(1.0, s_q, l) / ghat_q;

        const double amp = blk.lambda == 0 ? amp0 : amp1;
        const std::uint64_t s_tx = rng::substream(s, 7 + static_cast<std::uint64_t>(blk.lambda));
        r.x_relay.resize(T);
        for (int l = 0; l < T; ++l)
            r.x_relay[l] = amp * cgauss_at(1.0, s_tx, static_cast<std::uint64_t>(l));
        return r;
    };

    blk.r1 = relay(params.rho_sr1_sq(), 0x51, coeffs.a_r10, coeffs.a_r11);
    blk.r2 = relay(params.rho_sr2_sq(), 0x52, coeffs.a_r20, coeffs.a_r21);
    return blk;
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("fit_slope: need matched series of length >= 2");
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double denom = n * sxx - sx * sx;
    if (std::fabs(denom) < 1e-30) throw std::invalid_argument("fit_slope: degenerate abscissae");
    return (n * sxy - sx * sy) / denom;
}

TrainScaleReport mc_train_scale_checks(const std::vector<double>& rho_sq_list, int T,
                                      const McConfig& mc) {
    if (T < 2) throw std::invalid_argument("mc_train_scale_checks: requires T >= 2");
    if (rho_sq_list.size() < 2)
        throw std::invalid_argument("mc_train_scale_checks: need at least two strengths");

    TrainScaleReport rep;
    std::vector<double> xs, ys_scaling, ys_assembly;
    bool gaps_ok = true, window_ok = true;
    const double pi_e = 3.14159265358979323846 * std::exp(1.0);

    for (const double rho_sq : rho_sq_list) {
        const std::uint64_t seed_g = rng::substream(mc.seed, 0x61);
        const std::uint64_t seed_w = rng::substream(mc.seed, 0x62);

        const McEstimate log_ratio = mc_estimate(mc, [&](std::uint64_t i) {
            const cplx g = cgauss_at(rho_sq, seed_g, i);
            const cplx w = cgauss_at(1.0, seed_w, i);
            const cplx ghat = make_ghat(g + w);
            return std::log2(std::norm(g) / std::norm(ghat));
        });
        const McEstimate one_plus = mc_estimate(mc, [&](std::uint64_t i) {
            const cplx g = cgauss_at(rho_sq, seed_g, i);
            const cplx w = cgauss_at(1.0, seed_w, i);
            return std::log2(1.0 + std::norm(g + w));
        });
        const McEstimate ratio = mc_estimate(mc, [&](std::uint64_t i) {
            const cplx g = cgauss_at(rho_sq, seed_g, i);
            const cplx w = cgauss_at(1.0, seed_w, i);
            return std::norm(w) / (1.0 + std::norm(g + w));
        });

        TrainScaleRow row;
        row.rho_sq = rho_sq;
        row.mean_log_g_over_ghat = log_ratio.mean;
        row.gap_scaling = log_ratio.mean - std::log2(rho_sq / (2.0 * (2.0 + rho_sq)));
        row.mean_log_one_plus = one_plus.mean;
        row.ratio_estimate = ratio.mean;
        row.se_ratio = ratio.std_error;

        // Conditional-entropy upper-bound assembly, per data symbol:
        // log2(pi e [2(T-1) E[|w'|^2/(1+|g+w'|^2)] + 2T ln(2+rho^2)/(rho^2+1)])
        //   + (T-2) log2(pi e 2 ln(2+rho^2)/(rho^2+1)).
        const double tail = 2.0 * std::log(2.0 + rho_sq) / (rho_sq + 1.0);
        const double head = 2.0 * (T - 1) * ratio.mean + T * tail;
        const double assembly =
            std::log2(pi_e * head) + (T - 2) * std::log2(pi_e * tail);
        row.entropy_assembly = assembly / (T - 1);

        // Quantization-noise entropy chain, per symbol: -E log2(2(1+|g+w'|^2))
        // must clear log2(1/rho^2) - (gamma*log2 e + 2).
        const double lhs_q = -(1.0 + one_plus.mean);
        const double bound_q = std::log2(1.0 / rho_sq) - (kEulerGamma * kLog2E + 2.0);
        row.gap_quantizer = lhs_q - bound_q;

        const double slack = 3.0 * (log_ratio.std_error + one_plus.std_error);
        if (row.gap_scaling < -slack || row.gap_quantizer < -slack) gaps_ok = false;
        const double hi = std::log2(2.0 + rho_sq);
        if (one_plus.mean < hi - kEulerGamma * kLog2E - 3.0 * one_plus.std_error ||
            one_plus.mean > hi + 3.0 * one_plus.std_error)
            window_ok = false;

        xs.push_back(std::log2(rho_sq));
        ys_scaling.push_back(row.mean_log_g_over_ghat);
        ys_assembly.push_back(row.entropy_assembly);
        rep.rows.push_back(row);
    }

    rep.slope_scaling = fit_slope(xs, ys_scaling);
    rep.slope_assembly = fit_slope(xs, ys_assembly);
    rep.gaps_nonnegative = gaps_ok;
    rep.jensen_window = window_ok;
    rep.pass = gaps_ok && window_ok;
    return rep;
}

}  // namespace diamond
