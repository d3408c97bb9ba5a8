#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "diamond/params.hpp"
#include "diamond/rng.hpp"

namespace diamond {

struct LemmaReport {
    std::string lemma_id;
    double lhs_estimate = 0.0;
    double std_error = 0.0;
    double bound_lo = 0.0;
    double bound_hi = 0.0;
    bool pass = false;  // bound_lo - 3SE <= estimate <= bound_hi + 3SE
    std::uint64_t samples = 0;
    std::string notes;
};

LemmaReport finalize_report(LemmaReport rep);

/// Jensen sandwich for an exponential variate:
/// log2(a + b*mu) - gamma*log2(e) <= E log2(a + b*xi) <= log2(a + b*mu).
LemmaReport mc_jensen_exponential(double a, double b, double mu, const McConfig& mc);

/// Chi-squared counterpart:
/// log2(a+b*n) - 2*log2(e)/n + log2(1+1/n) <= E log2(a + b*chi2(n)) <= log2(a+b*n).
LemmaReport mc_jensen_chisq(double a, double b, int dof, const McConfig& mc);

/// E[b/(b+xi)] = x e^x E1(x) at x = b/mu, plus its log sandwich
/// (x/2) ln(1+2/x) <= x e^x E1(x) <= x ln(1+1/x).
LemmaReport mc_exp_reciprocal(double b, double mu, const McConfig& mc);

struct ScaledNoiseReport {
    LemmaReport base;            // direct estimator of E[|w|^2 / (1+|g+w|^2)]
    double closed_bound = 0.0;   // three-piece closed-form upper bound
    double second_estimate = 0.0;  // angular-integral form of the same mean
    double second_std_error = 0.0;
    double log_gap_bits = 0.0;   // log2(estimate) - log2(1/rho^2)
    bool two_estimators_agree = false;
    bool pass = false;
};

/// Correlated noise-over-estimate ratio of the scaled relay chain:
/// estimate E[|w|^2/(1+|g+w|^2)], check it against the closed bound, the
/// gDoF-order bound log2(1/rho^2) + 6 bits, and the angular-identity
/// re-estimator (stated without the spurious 2*pi factor; see notes).
ScaledNoiseReport mc_scaled_noise_ratio(double rho_sq, const McConfig& mc);

/// Relay scaling factor: unit phasor of the input plus the input itself, so
/// |result| = 1 + |input| exactly. Zero input maps to 1 by convention.
cplx make_ghat(cplx g_plus_w);

struct TsqmfRealization {
    cplx g{};        // fading of the source->relay link
    cplx w_pilot{};  // pilot-symbol noise
    cplx ghat{};     // scaling factor derived from g + w_pilot
    std::vector<cplx> x_data;    // source data symbols (length T-1)
    std::vector<cplx> y_scaled;  // (g/ghat) x + w/ghat
    std::vector<cplx> y_hat;     // y_scaled plus forward-simulated test-channel noise
    std::vector<cplx> x_relay;   // relay transmit vector for the active branch (length T)
    int lambda = 0;
};

struct TsqmfBlock {
    std::vector<cplx> x_source;  // shared data symbols (length T-1)
    int lambda = 0;              // 0 w.p. p_lambda, 1 otherwise
    TsqmfRealization r1, r2;
};

struct TsqmfCoeffs {
    double a_r10 = 0.0;  // relay 1 amplitude when lambda = 0
    double a_r11 = 1.0;  // relay 1 amplitude when lambda = 1
    double a_r20 = 1.0;  // relay 2 amplitude when lambda = 0
    double a_r21 = 0.0;  // relay 2 amplitude when lambda = 1
};

/// Simulate one coherence block of the train-scale quantize-map-forward
/// chain: pilot, scaling, quantization via its forward-run test channel, and
/// the time-shared relay transmit vectors. `index` selects independent blocks
/// under one seed.
TsqmfBlock sim_tsqmf_block(const NetworkParams& params, double p_lambda,
                           const TsqmfCoeffs& coeffs, std::uint64_t seed,
                           std::uint64_t index = 0);

struct TrainScaleRow {
    double rho_sq = 0.0;
    double mean_log_g_over_ghat = 0.0;  // E log2 |g/ghat|^2
    double gap_scaling = 0.0;           // margin over log2(rho^2 / (2(2+rho^2)))
    double entropy_assembly = 0.0;      // bound assembly divided by (T-1)
    double mean_log_one_plus = 0.0;     // E log2(1 + |g+w'|^2)
    double gap_quantizer = 0.0;         // h(Q) chain margin (per symbol)
    double ratio_estimate = 0.0;        // E[|w'|^2 / (1+|g+w'|^2)]
    double se_ratio = 0.0;
};

struct TrainScaleReport {
    std::vector<TrainScaleRow> rows;
    double slope_scaling = 0.0;    // slope of E log2|g/ghat|^2 vs log2 rho^2
    double slope_assembly = 0.0;   // slope of the entropy assembly vs log2 rho^2
    bool gaps_nonnegative = false;
    bool jensen_window = false;    // E log2(1+|g+w'|^2) inside its sandwich
    bool pass = false;
};

/// Point-to-point train-scale checks: the scaling-gain chain, the
/// conditional-entropy assembly, and the quantization-noise entropy chain,
/// evaluated over a list of link strengths.
TrainScaleReport mc_train_scale_checks(const std::vector<double>& rho_sq_list, int T,
                                      const McConfig& mc);

/// Least-squares slope of y against x.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace diamond
