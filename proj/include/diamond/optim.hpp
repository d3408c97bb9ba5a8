#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diamond/params.hpp"

namespace diamond {

struct ObjectiveTerms {
    double term1 = 0.0;  // MISO-cut term of the reduced program
    double term2 = 0.0;  // parallel-cut term
    double min_value = 0.0;
};

/// Two-variable reduced objective, per unit log2(SNR):
///   term1 = p*((T-1)*rd2 - gc) + (T-1)*(1-p)*rd1
///   term2 = (T-1)*sr2 + (T-2)*p*gc + (T-1)*(1-p)*rd1
/// with 0 <= p <= 1 and 0 <= gc <= gamma_rd1.
ObjectiveTerms reduced_objective(double p_lambda, double gamma_c, const NetworkParams& params);

enum class ActiveTerm { Term1, Term2, Both };

struct OptSolution {
    double p_lambda = 0.0;
    double gamma_c = 0.0;
    std::optional<double> c_r12_sq;  // snr^(gamma_c - gamma_rd1) when snr present
    double value = 0.0;              // objective value; divide by T for the gDoF share
    ActiveTerm active_term = ActiveTerm::Both;
};

/// Closed-form maximizer of the reduced program (canonical nontrivial regime):
///   case 1   ((T-2)rd2 <= (T-1)rd1):             gc = 0,          p = sr2/rd2
///   case 2.1 (otherwise, rd2 >  sr2+rd1):        gc = rd1,        p = sr2/(rd2-rd1)
///   case 2.2 (otherwise, rd2 <= sr2+rd1):        gc = rd2-sr2,    p = 1
OptSolution solve_reduced_closed(const NetworkParams& params);

/// Exhaustive maximization over a resolution x resolution grid of (p, gc).
/// Ties pick the lexicographically smallest (p, gc).
OptSolution solve_reduced_grid(const NetworkParams& params, int resolution);

/// Worst-case objective change across one grid cell (Lipschitz constant times
/// cell diagonal); the closed form and the grid optimum agree within a few of
/// these.
double grid_cell_bound(const NetworkParams& params, int resolution);

/// Discrete law over the relay power triple (|x_r2|^2, |x_r11|^2, |x_r12|^2).
struct MassPoint {
    double a2 = 0.0;  // |x_r2|^2
    double b2 = 0.0;  // |x_r11|^2
    double c2 = 0.0;  // |x_r12|^2
    double p = 0.0;
};

struct MassPointDistribution {
    std::vector<MassPoint> points;

    void validate() const;  // probabilities sum to 1 (1e-9), coordinates >= 0
    double mean_power() const;
    double mean_a2() const;
    double mean_b2_plus_c2() const;
};

struct LinkStrengths {
    double rho_rd1_sq = 1.0;
    double rho_rd2_sq = 1.0;
    double rho_sr2_sq = 1.0;
};

LinkStrengths link_strengths(const NetworkParams& params);

/// Per-point values of the two discretized cut expressions.
double lp_miso_value(const LinkStrengths& rho, int T, double a2, double b2, double c2);
double lp_parallel_value(const LinkStrengths& rho, int T, double a2, double b2, double c2);

struct LpSolution {
    MassPointDistribution dist;  // support of the optimal basic solution
    double value = 0.0;
    int support_size = 0;
    int iterations = 0;
};

/// Epigraph LP over the grid {0, step, 2*step, ..., <= grid_max}^3:
///   maximize t  s.t.  t <= sum p*miso,  t <= (T-1)*log2(rho_sr2^2) + sum p*parallel,
///                     sum p*(a2+b2+c2) <= 2T,  sum p = 1,  p >= 0,
/// solved with a small dense two-phase simplex; the optimum is a basic
/// solution, so at most 3 grid points carry mass.
LpSolution solve_discretized_lp(const LinkStrengths& rho, int T, double grid_step, double grid_max);

/// Project every point onto the dominant-coordinate families used by the
/// support-reduction argument: (a,0,c) when the r2 link dominates, else
/// (0, (b2+c2)/2, (b2+c2)/2).
MassPointDistribution apply_case_split(const MassPointDistribution& dist,
                                       const LinkStrengths& rho);

/// Merge each family to a single point, preserving the family's mean
/// log2(rho^2 x + 1) terms exactly without increasing mean power. Input must
/// already be split into (a,0,c) and (0,d,d) points.
MassPointDistribution reduce_to_two_points(const MassPointDistribution& dist,
                                           const LinkStrengths& rho, int T);

struct GradBoundReport {
    double max_abs_partial_miso = 0.0;
    double max_abs_partial_parallel = 0.0;
    double max_norm_miso = 0.0;
    double max_norm_parallel = 0.0;
    double partial_bound = 0.0;  // 2 * rho_rd2^2
    double norm_bound = 0.0;     // 2 * sqrt(3) * rho_rd2^2
    int samples = 0;
    bool pass = false;
};

/// Central finite differences of both cut expressions at random feasible triples;
/// verifies every partial stays within 2*rho_rd2^2 and the gradient norm
/// within 2*sqrt(3)*rho_rd2^2 (relative tolerance 1e-3).
GradBoundReport grad_bound_check(const LinkStrengths& rho, int T, int n_samples,
                                    std::uint64_t seed);

std::string to_string(ActiveTerm term);

}  // namespace diamond
