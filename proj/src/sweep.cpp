#include "diamond/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "diamond/mclab.hpp"
#include "diamond/regime.hpp"

namespace diamond {

OperatingPoint tsqmf_operating_point(const NetworkParams& params, double snr) {
    if (!in_nontrivial_regime(params))
        throw std::invalid_argument("tsqmf_operating_point: params outside the nontrivial regime");
    const OptSolution sol = solve_reduced_closed(params);
    OperatingPoint op;
    op.p_lambda = sol.p_lambda;
    if (sol.gamma_c <= 0.0) {
        // Case 1: relay 1 silent while relay 2 transmits.
        op.c_r12_sq = 0.0;
        op.case_label = "1";
    } else if (sol.p_lambda >= 1.0) {
        op.c_r12_sq = std::pow(snr, params.gamma_rd2 - params.gamma_sr2 - params.gamma_rd1);
        op.case_label = "2.2";
    } else {
        op.c_r12_sq = 1.0;  // gamma_c = gamma_rd1
        op.case_label = "2.1";
    }
    return op;
}

MassPointDistribution two_point_distribution(const NetworkParams& params, double snr) {
    const OperatingPoint op = tsqmf_operating_point(params, snr);
    MassPointDistribution dist;
    const double T = params.T;
    if (op.p_lambda > 0.0)
        dist.points.push_back({T, 0.0, op.c_r12_sq, op.p_lambda});
    if (op.p_lambda < 1.0)
        dist.points.push_back({0.0, T / 2.0, T / 2.0, 1.0 - op.p_lambda});
    return dist;
}

SweepResult sweep_slope(const NetworkParams& params, const std::vector<double>& snr_db_list,
                        SweepScheme scheme, const std::string& out_csv_path) {
    params.validate();
    if (snr_db_list.size() < 3)
        throw std::invalid_argument("sweep_slope: need at least three SNR points");
    std::vector<double> db = snr_db_list;
    std::sort(db.begin(), db.end());

    SweepResult res;
    res.scheme = to_string(scheme);
    res.narrow_range_warning = db.back() - db.front() < 20.0;

    for (const double snr_db : db) {
        const double snr = std::pow(10.0, snr_db / 10.0);
        const NetworkParams at_snr = params.with_snr(snr);
        SweepRow row;
        row.snr_db = snr_db;
        row.snr = snr;
        if (scheme == SweepScheme::Tsqmf) {
            const OperatingPoint op = tsqmf_operating_point(params, snr);
            const RateReport rep = tsqmf_rate_bound(at_snr, op.p_lambda, op.c_r12_sq);
            row.terms = rep.terms;
            row.rate_per_symbol = rep.rate_per_symbol;
            row.binding = rep.binding;
        } else {
            const MassPointDistribution dist = two_point_distribution(params, snr);
            const LinkStrengths rho = link_strengths(at_snr);
            const double v1 = miso_cut_value(dist, rho.rho_rd1_sq, rho.rho_rd2_sq, params.T);
            const double v2 = (params.T - 1) * std::log2(rho.rho_sr2_sq) +
                              parallel_cut_value(dist, rho.rho_rd1_sq, rho.rho_rd2_sq, params.T);
            row.terms.emplace_back("miso_cut", v1);
            row.terms.emplace_back("parallel_cut", v2);
            row.binding = v1 <= v2 ? "miso_cut" : "parallel_cut";
            row.rate_per_symbol = std::min(v1, v2) / params.T;
        }
        res.rows.push_back(std::move(row));
    }

    // Fit the block rate against log2(snr) over the top two decades.
    const double cutoff = db.back() - 20.0;
    std::vector<double> xs, ys;
    for (const auto& row : res.rows) {
        if (row.snr_db + 1e-9 < cutoff && !res.narrow_range_warning) continue;
        xs.push_back(std::log2(row.snr));
        ys.push_back(params.T * row.rate_per_symbol);
    }
    res.fitted_slope = fit_slope(xs, ys);
    res.slope_target = params.T * gdof_network(params).gdof;
    res.rel_error = std::fabs(res.fitted_slope - res.slope_target) /
                    std::max(res.slope_target, 1e-9);

    if (!out_csv_path.empty()) {
        std::FILE* f = std::fopen(out_csv_path.c_str(), "wb");
        if (!f) throw std::runtime_error("sweep_slope: cannot open " + out_csv_path);
        std::fprintf(f, "snr_db,snr");
        for (const auto& [name, _] : res.rows.front().terms)
            std::fprintf(f, ",%s", name.c_str());
        std::fprintf(f, ",rate_per_symbol\n");
        for (const auto& row : res.rows) {
            std::fprintf(f, "%.10g,%.17g", row.snr_db, row.snr);
            for (const auto& [_, value] : row.terms) std::fprintf(f, ",%.17g", value);
            std::fprintf(f, ",%.17g\n", row.rate_per_symbol);
        }
        std::fclose(f);
    }
    return res;
}

std::string to_string(SweepScheme scheme) {
    return scheme == SweepScheme::Tsqmf ? "tsqmf" : "cutset";
}

}  // namespace diamond
