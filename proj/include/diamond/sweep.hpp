#pragma once

#include <string>
#include <utility>
#include <vector>

#include "diamond/bounds.hpp"
#include "diamond/gdof.hpp"
#include "diamond/optim.hpp"
#include "diamond/params.hpp"

namespace diamond {

enum class SweepScheme { Tsqmf, Cutset };

struct SweepRow {
    double snr_db = 0.0;
    double snr = 0.0;
    std::vector<std::pair<std::string, double>> terms;  // bits per block
    double rate_per_symbol = 0.0;
    std::string binding;
};

struct SweepResult {
    std::string scheme;
    std::vector<SweepRow> rows;
    double fitted_slope = 0.0;  // least squares of T*rate vs log2(snr), top two decades
    double slope_target = 0.0;  // T * gdof_network
    double rel_error = 0.0;
    bool narrow_range_warning = false;  // span below two decades
};

/// Scheme operating point derived from the closed-form optimizer: the
/// time-sharing probability and the relay-1 power factor used by both the
/// achievable-rate terms and the two-point outer-bound distribution.
struct OperatingPoint {
    double p_lambda = 0.0;
    double c_r12_sq = 0.0;  // 0 in case 1; 1 in case 2.1; snr^(rd2-sr2-rd1) in case 2.2
    std::string case_label;  // "1", "2.1", "2.2"
};

OperatingPoint tsqmf_operating_point(const NetworkParams& params, double snr);

/// Two-point mass distribution realizing the operating point:
/// (T, 0, c_r12_sq) w.p. p and (0, T/2, T/2) w.p. 1-p.
MassPointDistribution two_point_distribution(const NetworkParams& params, double snr);

/// Evaluate the chosen bound across the SNR grid (values in dB), fit the
/// block-rate slope over the top two decades, and optionally write a CSV
/// (header row, one row per SNR, '.' decimal separator).
SweepResult sweep_slope(const NetworkParams& params, const std::vector<double>& snr_db_list,
                        SweepScheme scheme, const std::string& out_csv_path = "");

std::string to_string(SweepScheme scheme);

}  // namespace diamond
