#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "diamond/optim.hpp"
#include "diamond/params.hpp"

namespace diamond {

/// MISO-cut expectation expression for a discrete power distribution
/// (bits per block of T symbols, evaluated exactly, no sampling).
double miso_cut_value(const MassPointDistribution& dist, double rho_rd1_sq, double rho_rd2_sq, int T);

/// Parallel-cut counterpart of miso_cut_value.
double parallel_cut_value(const MassPointDistribution& dist, double rho_rd1_sq, double rho_rd2_sq, int T);

/// min{miso_cut_value, (T-1)*log2(rho_sr2^2) + parallel_cut_value}; requires the split power budget
/// E|x_r2|^2 <= T and E[|x_r11|^2 + |x_r12|^2] <= T.
double cutset_objective(const MassPointDistribution& dist, const NetworkParams& params);

struct RateReport {
    std::vector<std::pair<std::string, double>> terms;  // bits per block of T symbols
    std::string binding;                                // name of the minimum term
    double rate_per_symbol = 0.0;                       // min over terms divided by T
    double snr = 0.0;
};

/// Achievable-rate terms of the train-scale quantize-map-forward scheme at
/// finite SNR for a given time-sharing probability and relay-1 power factor.
RateReport tsqmf_rate_bound(const NetworkParams& params, double p_lambda, double c_r12_sq);

struct MisoEntropyResult {
    double mc_value = 0.0;     // E log2 det(I + r11 a1 X1'X1 + r12 a2 X2'X2)
    double std_error = 0.0;
    double closed_bound = 0.0;  // log2((1 + r11 a1)(1 + r12 a2))
};

/// Monte Carlo of the conditional-entropy excess of the 2x1 MISO channel with
/// independent Gaussian inputs, against the product-form bound (which holds
/// up to an SNR-independent constant).
MisoEntropyResult miso_cond_entropy(double a1_sq, double a2_sq, double rho11_sq,
                                    double rho12_sq, int T, const McConfig& mc);

struct LogdetCheckResult {
    bool pass = false;
    double max_rel_err = 0.0;
    int draws = 0;
};

/// det(I_T + L^H D L) == det(I_M + L_M^H D L_M) for random M x T lower-
/// triangular L (zero columns beyond M) and positive diagonal D; 1e-9
/// relative tolerance.
LogdetCheckResult logdet_identity_check(int M, int T, std::uint64_t seed, int draws = 100);

}  // namespace diamond
