#include "diamond/optim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "diamond/regime.hpp"
#include "diamond/rng.hpp"

namespace diamond {

namespace {

double log2_checked(double x) {
    if (!(x > 0)) throw std::runtime_error("optim: log2 of nonpositive argument");
    return std::log2(x);
}

}  // namespace

ObjectiveTerms reduced_objective(double p_lambda, double gamma_c, const NetworkParams& params) {
    params.validate();
    if (!(p_lambda >= 0.0 && p_lambda <= 1.0))
        throw std::invalid_argument("reduced_objective: p_lambda must be in [0,1]");
    if (!(gamma_c >= 0.0 && gamma_c <= params.gamma_rd1 + 1e-12))
        throw std::invalid_argument("reduced_objective: gamma_c must be in [0, gamma_rd1]");
    const double Tm1 = params.T - 1;
    const double Tm2 = params.T - 2;
    ObjectiveTerms t;
    t.term1 = p_lambda * (Tm1 * params.gamma_rd2 - gamma_c) +
              Tm1 * (1.0 - p_lambda) * params.gamma_rd1;
    t.term2 = Tm1 * params.gamma_sr2 + Tm2 * p_lambda * gamma_c +
              Tm1 * (1.0 - p_lambda) * params.gamma_rd1;
    t.min_value = std::min(t.term1, t.term2);
    return t;
}

OptSolution solve_reduced_closed(const NetworkParams& params) {
    params.validate();
    if (!in_nontrivial_regime(params))
        throw std::invalid_argument("solve_reduced_closed: params outside the nontrivial regime");

    OptSolution s;
    if (params.gamma_rd2 <= 0.0) {
        // All relay-side exponents vanish; the objective is identically zero.
        s.p_lambda = 0.0;
        s.gamma_c = 0.0;
    } else if ((params.T - 2) * params.gamma_rd2 <= (params.T - 1) * params.gamma_rd1) {
        s.gamma_c = 0.0;
        s.p_lambda = params.gamma_sr2 / params.gamma_rd2;
    } else if (params.gamma_rd2 > params.gamma_sr2 + params.gamma_rd1) {
        s.gamma_c = params.gamma_rd1;
        s.p_lambda = params.gamma_sr2 / (params.gamma_rd2 - params.gamma_rd1);
    } else {
        s.gamma_c = params.gamma_rd2 - params.gamma_sr2;
        s.p_lambda = 1.0;
    }
    const ObjectiveTerms t = reduced_objective(s.p_lambda, s.gamma_c, params);
    s.value = t.min_value;
    const double scale = std::max({1.0, t.term1, t.term2});
    if (std::fabs(t.term1 - t.term2) <= 1e-9 * scale)
        s.active_term = ActiveTerm::Both;
    else
        s.active_term = t.term1 < t.term2 ? ActiveTerm::Term1 : ActiveTerm::Term2;
    if (params.has_snr())
        s.c_r12_sq = std::pow(params.snr_value(), s.gamma_c - params.gamma_rd1);
    return s;
}

OptSolution solve_reduced_grid(const NetworkParams& params, int resolution) {
    params.validate();
    if (resolution < 2) throw std::invalid_argument("solve_reduced_grid: resolution must be >= 2");
    const int n = resolution;
    const double gc_max = params.gamma_rd1;
    const int n_gc = gc_max > 0.0 ? n : 1;

    OptSolution best;
    best.value = -std::numeric_limits<double>::infinity();
    ObjectiveTerms best_terms{};
    for (int i = 0; i < n; ++i) {
        const double p = static_cast<double>(i) / (n - 1);
        for (int j = 0; j < n_gc; ++j) {
            const double gc = n_gc == 1 ? 0.0 : gc_max * j / (n - 1);
            const ObjectiveTerms t = reduced_objective(p, gc, params);
            if (t.min_value > best.value) {
                best.value = t.min_value;
                best.p_lambda = p;
                best.gamma_c = gc;
                best_terms = t;
            }
        }
    }
    const double scale = std::max({1.0, best_terms.term1, best_terms.term2});
    if (std::fabs(best_terms.term1 - best_terms.term2) <= 1e-9 * scale)
        best.active_term = ActiveTerm::Both;
    else
        best.active_term = best_terms.term1 < best_terms.term2 ? ActiveTerm::Term1
                                                               : ActiveTerm::Term2;
    if (params.has_snr())
        best.c_r12_sq = std::pow(params.snr_value(), best.gamma_c - params.gamma_rd1);
    return best;
}

double grid_cell_bound(const NetworkParams& params, int resolution) {
    const double Tm1 = params.T - 1;
    const double lip_p = std::max({Tm1 * (params.gamma_rd2 - params.gamma_rd1),
                                   params.gamma_rd1, Tm1 * params.gamma_rd1});
    const double lip_gc = std::max(1.0, static_cast<double>(params.T - 2));
    const double dp = 1.0 / (resolution - 1);
    const double dgc = params.gamma_rd1 / (resolution - 1);
    return lip_p * dp + lip_gc * dgc;
}

void MassPointDistribution::validate() const {
    double total = 0.0;
    for (const auto& pt : points) {
        if (pt.a2 < 0 || pt.b2 < 0 || pt.c2 < 0 || pt.p < 0)
            throw std::invalid_argument("MassPointDistribution: negative entry");
        total += pt.p;
    }
    if (std::fabs(total - 1.0) > 1e-9)
        throw std::invalid_argument("MassPointDistribution: probabilities must sum to 1");
}

double MassPointDistribution::mean_power() const {
    double s = 0.0;
    for (const auto& pt : points) s += pt.p * (pt.a2 + pt.b2 + pt.c2);
    return s;
}

double MassPointDistribution::mean_a2() const {
    double s = 0.0;
    for (const auto& pt : points) s += pt.p * pt.a2;
    return s;
}

double MassPointDistribution::mean_b2_plus_c2() const {
    double s = 0.0;
    for (const auto& pt : points) s += pt.p * (pt.b2 + pt.c2);
    return s;
}

LinkStrengths link_strengths(const NetworkParams& params) {
    return {params.rho_rd1_sq(), params.rho_rd2_sq(), params.rho_sr2_sq()};
}

double lp_miso_value(const LinkStrengths& rho, int T, double a2, double b2, double c2) {
    const double lin = rho.rho_rd2_sq * a2 + rho.rho_rd1_sq * b2 + rho.rho_rd1_sq * c2;
    const double cross = rho.rho_rd1_sq * rho.rho_rd2_sq * c2 * a2;
    return T * log2_checked(lin + T) - log2_checked(lin + cross + 1.0);
}

double lp_parallel_value(const LinkStrengths& rho, int T, double a2, double b2, double c2) {
    const double lin = rho.rho_rd2_sq * a2 + rho.rho_rd1_sq * b2 + rho.rho_rd1_sq * c2;
    const double cross = rho.rho_rd1_sq * rho.rho_rd2_sq * c2 * a2;
    return log2_checked(rho.rho_rd2_sq * a2 + rho.rho_rd1_sq * b2 + 1.0) +
           (T - 1) * log2_checked(rho.rho_rd1_sq * c2 + (T - 1)) -
           log2_checked(lin + cross + 1.0);
}

namespace {

// Dense two-phase simplex, maximization, Bland's rule. Small row counts only.
class Simplex {
  public:
    enum RowType { LE, GE, EQ };

    Simplex(int nvars) : n_(nvars), c_(nvars, 0.0) {}

    void set_objective(int j, double cj) { c_[j] = cj; }
    void add_row(std::vector<double> coeff, RowType type, double rhs) {
        rows_.push_back(std::move(coeff));
        types_.push_back(type);
        rhs_.push_back(rhs);
    }

    // Returns false on infeasibility; throws on unboundedness.
    bool solve(std::vector<double>& x, double& objective) {
        const int m = static_cast<int>(rows_.size());
        // Flip rows to nonnegative right-hand sides.
        for (int i = 0; i < m; ++i) {
            if (rhs_[i] < 0.0) {
                for (auto& v : rows_[i]) v = -v;
                rhs_[i] = -rhs_[i];
                if (types_[i] == LE) types_[i] = GE;
                else if (types_[i] == GE) types_[i] = LE;
            }
        }
        int n_slack = 0;
        for (int i = 0; i < m; ++i)
            if (types_[i] != EQ) ++n_slack;
        int n_art = 0;
        for (int i = 0; i < m; ++i)
            if (types_[i] != LE) ++n_art;

        const int total = n_ + n_slack + n_art;
        tab_.assign(m + 1, std::vector<double>(total + 1, 0.0));
        basis_.assign(m, -1);
        first_art_ = n_ + n_slack;

        int slack_at = n_, art_at = first_art_;
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < n_; ++j) tab_[i][j] = rows_[i][j];
            tab_[i][total] = rhs_[i];
            if (types_[i] == LE) {
                tab_[i][slack_at] = 1.0;
                basis_[i] = slack_at++;
            } else if (types_[i] == GE) {
                tab_[i][slack_at++] = -1.0;
                tab_[i][art_at] = 1.0;
                basis_[i] = art_at++;
            } else {
                tab_[i][art_at] = 1.0;
                basis_[i] = art_at++;
            }
        }

        // Phase 1: drive the artificial variables to zero.
        if (n_art > 0) {
            auto& obj = tab_[m];
            std::fill(obj.begin(), obj.end(), 0.0);
            for (int j = first_art_; j < total; ++j) obj[j] = -1.0;
            price_out(m);
            iterate(total, total);
            if (-tab_[m][total] > 1e-7) return false;  // infeasible
            // Pivot any artificial still in the basis out on a real column.
            for (int i = 0; i < m; ++i) {
                if (basis_[i] < first_art_) continue;
                int q = -1;
                for (int j = 0; j < first_art_; ++j)
                    if (std::fabs(tab_[i][j]) > 1e-9) { q = j; break; }
                if (q >= 0) pivot(i, q, total);
                // else: redundant row, leave the zero artificial in place
            }
        }

        // Phase 2: original objective, artificial columns frozen.
        auto& obj = tab_[m];
        std::fill(obj.begin(), obj.end(), 0.0);
        for (int j = 0; j < n_; ++j) obj[j] = c_[j];
        price_out(m);
        iterate(first_art_, total);

        x.assign(n_, 0.0);
        const int mrows = static_cast<int>(rows_.size());
        for (int i = 0; i < mrows; ++i)
            if (basis_[i] < n_) x[basis_[i]] = tab_[i][total];
        objective = -tab_[m][total];
        iterations_ = iter_count_;
        return true;
    }

    int iterations() const { return iterations_; }

  private:
    void price_out(int m) {
        for (int i = 0; i < m; ++i) {
            const double cb = tab_[m][basis_[i]];
            if (cb == 0.0) continue;
            for (std::size_t j = 0; j < tab_[m].size(); ++j) tab_[m][j] -= cb * tab_[i][j];
        }
    }

    void pivot(int r, int q, int total) {
        const int m = static_cast<int>(basis_.size());
        const double piv = tab_[r][q];
        for (int j = 0; j <= total; ++j) tab_[r][j] /= piv;
        for (int i = 0; i <= m; ++i) {
            if (i == r) continue;
            const double f = tab_[i][q];
            if (f == 0.0) continue;
            for (int j = 0; j <= total; ++j) tab_[i][j] -= f * tab_[r][j];
        }
        basis_[r] = q;
    }

    void iterate(int ncols, int total) {
        const int m = static_cast<int>(basis_.size());
        const double eps = 1e-9;
        for (iter_count_ = 0; iter_count_ < 100000; ++iter_count_) {
            int q = -1;  // Bland: smallest improving index
            for (int j = 0; j < ncols; ++j) {
                if (tab_[m][j] > eps) { q = j; break; }
            }
            if (q < 0) return;  // optimal
            int r = -1;
            double best = std::numeric_limits<double>::infinity();
            for (int i = 0; i < m; ++i) {
                if (tab_[i][q] > eps) {
                    const double ratio = tab_[i][total] / tab_[i][q];
                    if (ratio < best - 1e-12 ||
                        (ratio < best + 1e-12 && (r < 0 || basis_[i] < basis_[r]))) {
                        best = ratio;
                        r = i;
                    }
                }
            }
            if (r < 0) throw std::runtime_error("simplex: unbounded problem");
            pivot(r, q, total);
        }
        throw std::runtime_error("simplex: iteration limit reached");
    }

    int n_;
    std::vector<double> c_;
    std::vector<std::vector<double>> rows_;
    std::vector<RowType> types_;
    std::vector<double> rhs_;
    std::vector<std::vector<double>> tab_;
    std::vector<int> basis_;
    int first_art_ = 0;
    int iter_count_ = 0;
    int iterations_ = 0;
};

}  // namespace

LpSolution solve_discretized_lp(const LinkStrengths& rho, int T, double grid_step, double grid_max) {
    if (T < 2) throw std::invalid_argument("solve_discretized_lp: requires T >= 2");
    if (!(grid_step > 0.0) || !(grid_max >= 0.0))
        throw std::invalid_argument("solve_discretized_lp: grid_step must be > 0 and grid_max >= 0");
    const int k_max = static_cast<int>(std::floor(grid_max / grid_step + 1e-9));
    const std::size_t per_axis = static_cast<std::size_t>(k_max) + 1;
    const std::size_t n_points = per_axis * per_axis * per_axis;
    if (n_points > 300000) throw std::invalid_argument("solve_discretized_lp: grid too large");

    std::vector<double> miso(n_points), parallel(n_points), power(n_points);
    std::vector<std::array<double, 3>> coords(n_points);
    std::size_t idx = 0;
    for (std::size_t ia = 0; ia < per_axis; ++ia)
        for (std::size_t ib = 0; ib < per_axis; ++ib)
            for (std::size_t ic = 0; ic < per_axis; ++ic, ++idx) {
                const double a2 = ia * grid_step, b2 = ib * grid_step, c2 = ic * grid_step;
                coords[idx] = {a2, b2, c2};
                miso[idx] = lp_miso_value(rho, T, a2, b2, c2);
                parallel[idx] = lp_parallel_value(rho, T, a2, b2, c2);
                power[idx] = a2 + b2 + c2;
            }

    const int n_vars = static_cast<int>(n_points) + 1;  // p_j plus epigraph t
    const int t_col = static_cast<int>(n_points);
    Simplex lp(n_vars);
    lp.set_objective(t_col, 1.0);

    std::vector<double> row(n_vars, 0.0);
    // t <= sum p_j * miso_j
    for (std::size_t j = 0; j < n_points; ++j) row[j] = miso[j];
    row[t_col] = -1.0;
    lp.add_row(row, Simplex::GE, 0.0);
    // t <= (T-1) log2(rho_sr2^2) + sum p_j * parallel_j
    for (std::size_t j = 0; j < n_points; ++j) row[j] = parallel[j];
    row[t_col] = -1.0;
    lp.add_row(row, Simplex::GE, -(T - 1) * std::log2(rho.rho_sr2_sq));
    // total power
    for (std::size_t j = 0; j < n_points; ++j) row[j] = power[j];
    row[t_col] = 0.0;
    lp.add_row(row, Simplex::LE, 2.0 * T);
    // probabilities sum to one
    for (std::size_t j = 0; j < n_points; ++j) row[j] = 1.0;
    lp.add_row(row, Simplex::EQ, 1.0);

    std::vector<double> x;
    double value = 0.0;
    if (!lp.solve(x, value))
        throw std::runtime_error("solve_discretized_lp: LP infeasible (degenerate grid or parameters)");

    LpSolution out;
    out.value = value;
    out.iterations = lp.iterations();
    for (std::size_t j = 0; j < n_points; ++j) {
        if (x[j] > 1e-9) {
            out.dist.points.push_back({coords[j][0], coords[j][1], coords[j][2], x[j]});
        }
    }
    out.support_size = static_cast<int>(out.dist.points.size());
    // Basic solutions can carry rounding crumbs; renormalize exactly.
    double total = 0.0;
    for (const auto& pt : out.dist.points) total += pt.p;
    for (auto& pt : out.dist.points) pt.p /= total;
    return out;
}

MassPointDistribution apply_case_split(const MassPointDistribution& dist,
                                       const LinkStrengths& rho) {
    dist.validate();
    MassPointDistribution out;
    for (const auto& pt : dist.points) {
        const double r2a = rho.rho_rd2_sq * pt.a2;
        const double dominant = std::max(rho.rho_rd1_sq * pt.b2, rho.rho_rd1_sq * pt.c2);
        if (r2a >= dominant) {
            out.points.push_back({pt.a2, 0.0, pt.c2, pt.p});
        } else {
            const double d2 = 0.5 * (pt.b2 + pt.c2);
            out.points.push_back({0.0, d2, d2, pt.p});
        }
    }
    return out;
}

namespace {

// Merged coordinate preserving the family mean of log2(rho2*x + 1).
double merge_log_preserving(const std::vector<std::pair<double, double>>& px, double rho2,
                            double total_p) {
    if (total_p <= 0.0) return 0.0;
    if (rho2 <= 0.0) {
        double mean = 0.0;
        for (const auto& [p, v] : px) mean += p * v;
        return mean / total_p;
    }
    double mean_log = 0.0;
    for (const auto& [p, v] : px) mean_log += p * std::log2(rho2 * v + 1.0);
    mean_log /= total_p;
    return (std::exp2(mean_log) - 1.0) / rho2;
}

}  // namespace

MassPointDistribution reduce_to_two_points(const MassPointDistribution& dist,
                                           const LinkStrengths& rho, int T) {
    (void)T;
    dist.validate();
    std::vector<std::pair<double, double>> c_a2, c_c2, d_d2;
    double pc = 0.0, pd = 0.0;
    for (const auto& pt : dist.points) {
        const double scale = std::max({1.0, pt.a2, pt.b2, pt.c2});
        if (pt.b2 <= 1e-12 * scale) {
            c_a2.emplace_back(pt.p, pt.a2);
            c_c2.emplace_back(pt.p, pt.c2);
            pc += pt.p;
        } else if (pt.a2 <= 1e-12 * scale && std::fabs(pt.b2 - pt.c2) <= 1e-9 * scale) {
            d_d2.emplace_back(pt.p, pt.b2);
            pd += pt.p;
        } else {
            throw std::invalid_argument(
                "reduce_to_two_points: point is neither (a,0,c) nor (0,d,d) type");
        }
    }

    MassPointDistribution out;
    if (pc > 1e-15) {
        const double a2 = merge_log_preserving(c_a2, rho.rho_rd2_sq, pc);
        const double c2 = merge_log_preserving(c_c2, rho.rho_rd1_sq, pc);
        out.points.push_back({a2, 0.0, c2, pc});
    }
    if (pd > 1e-15) {
        const double d2 = merge_log_preserving(d_d2, rho.rho_rd1_sq, pd);
        out.points.push_back({0.0, d2, d2, pd});
    }
    // Guard against probability rounding.
    double total = 0.0;
    for (const auto& pt : out.points) total += pt.p;
    for (auto& pt : out.points) pt.p /= total;
    if (dist.mean_power() + 1e-9 * (1.0 + dist.mean_power()) < out.mean_power())
        throw std::logic_error("reduce_to_two_points: merge increased mean power");
    return out;
}

GradBoundReport grad_bound_check(const LinkStrengths& rho, int T, int n_samples,
                                    std::uint64_t seed) {
    if (n_samples < 1) throw std::invalid_argument("grad_bound_check: n_samples must be >= 1");
    if (T < 2) throw std::invalid_argument("grad_bound_check: requires T >= 2");

    GradBoundReport rep;
    rep.samples = n_samples + 1;
    rep.partial_bound = 2.0 * rho.rho_rd2_sq;
    rep.norm_bound = 2.0 * std::sqrt(3.0) * rho.rho_rd2_sq;

    auto probe = [&](double a2, double b2, double c2) {
        double g1[3], g2[3];
        const double x[3] = {a2, b2, c2};
        for (int k = 0; k < 3; ++k) {
            const double h = 1e-5 * (x[k] + 1.0);
            double xp[3] = {a2, b2, c2}, xm[3] = {a2, b2, c2};
            xp[k] += h;
            double denom = 2.0 * h;
            if (x[k] - h >= 0.0) {
                xm[k] -= h;
            } else {
                denom = h;  // one-sided at the boundary
            }
            g1[k] = (lp_miso_value(rho, T, xp[0], xp[1], xp[2]) - lp_miso_value(rho, T, xm[0], xm[1], xm[2])) /
                    denom;
            g2[k] = (lp_parallel_value(rho, T, xp[0], xp[1], xp[2]) - lp_parallel_value(rho, T, xm[0], xm[1], xm[2])) /
                    denom;
        }
        double n1 = 0.0, n2 = 0.0;
        for (int k = 0; k < 3; ++k) {
            rep.max_abs_partial_miso = std::max(rep.max_abs_partial_miso, std::fabs(g1[k]));
            rep.max_abs_partial_parallel = std::max(rep.max_abs_partial_parallel, std::fabs(g2[k]));
            n1 += g1[k] * g1[k];
            n2 += g2[k] * g2[k];
        }
        rep.max_norm_miso = std::max(rep.max_norm_miso, std::sqrt(n1));
        rep.max_norm_parallel = std::max(rep.max_norm_parallel, std::sqrt(n2));
    };

    probe(0.0, 0.0, 0.0);
    const double span = 2.0 * T;
    for (int s = 0; s < n_samples; ++s) {
        const std::uint64_t base = static_cast<std::uint64_t>(s) * 3;
        probe(span * rng::uniform(seed, base), span * rng::uniform(seed, base + 1),
              span * rng::uniform(seed, base + 2));
    }

    const double tol = 1.0 + 1e-3;
    rep.pass = rep.max_abs_partial_miso <= rep.partial_bound * tol &&
               rep.max_abs_partial_parallel <= rep.partial_bound * tol &&
               rep.max_norm_miso <= rep.norm_bound * tol && rep.max_norm_parallel <= rep.norm_bound * tol;
    return rep;
}

std::string to_string(ActiveTerm term) {
    switch (term) {
        case ActiveTerm::Term1: return "term1";
        case ActiveTerm::Term2: return "term2";
        case ActiveTerm::Both: return "both";
    }
    return "unknown";
}

}  // namespace diamond
