// Command-line surface for the diamond-network toolkit: regime
// classification, gDoF formulas, bound optimizers, SNR sweeps, Monte Carlo
// lemma verification, and the worked-example reproduction.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "diamond/bounds.hpp"
#include "diamond/gdof.hpp"
#include "diamond/mclab.hpp"
#include "diamond/optim.hpp"
#include "diamond/params.hpp"
#include "diamond/regime.hpp"
#include "diamond/special.hpp"
#include "diamond/sweep.hpp"

using json = nlohmann::json;
using namespace diamond;

namespace {

constexpr const char* kVersion = "0.1.0";

struct CommonOpts {
    int T = 3;
    std::string gamma;
    std::optional<double> snr_db;
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 0;
    std::string format = "json";
    std::string out;
    int grid_res = 1001;
};

NetworkParams parse_params(const CommonOpts& o, bool need_snr = false) {
    NetworkParams p;
    p.T = o.T;
    std::stringstream ss(o.gamma);
    std::vector<double> g;
    std::string tok;
    while (std::getline(ss, tok, ',')) g.push_back(std::stod(tok));
    if (g.size() != 4)
        throw std::invalid_argument("--gamma expects four comma-separated values: sr1,sr2,rd1,rd2");
    p.gamma_sr1 = g[0];
    p.gamma_sr2 = g[1];
    p.gamma_rd1 = g[2];
    p.gamma_rd2 = g[3];
    if (o.snr_db) p.snr = std::pow(10.0, *o.snr_db / 10.0);
    if (need_snr && !p.snr) throw std::invalid_argument("this command requires --snr-db");
    p.validate();
    return p;
}

json params_json(const NetworkParams& p) {
    json j{{"T", p.T},
           {"gamma_sr1", p.gamma_sr1},
           {"gamma_sr2", p.gamma_sr2},
           {"gamma_rd1", p.gamma_rd1},
           {"gamma_rd2", p.gamma_rd2}};
    if (p.snr) j["snr"] = *p.snr;
    return j;
}

json regime_json(const Regime& r) {
    return json{{"kind", to_string(r.kind)},
                {"selected_relay", r.selected_relay},
                {"swapped", r.swapped},
                {"permutation_index", r.permutation_index}};
}

json lemma_json(const LemmaReport& rep) {
    json j{{"lemma", rep.lemma_id},    {"estimate", rep.lhs_estimate},
           {"std_error", rep.std_error}, {"bound_lo", rep.bound_lo},
           {"bound_hi", rep.bound_hi},   {"pass", rep.pass},
           {"samples", rep.samples}};
    if (!rep.notes.empty()) j["notes"] = rep.notes;
    return j;
}

void emit(const CommonOpts& o, const std::string& command, const NetworkParams* params,
          const json& result) {
    json doc{{"command", command},
             {"result", result},
             {"meta", {{"seed", o.seed}, {"version", kVersion}}}};
    doc["params"] = params ? params_json(*params) : json::object();

    std::string text;
    if (o.format == "json") {
        text = doc.dump(2) + "\n";
    } else if (o.format == "csv") {
        // Flat key,value rows; sweeps produce their table via --out.
        std::ostringstream os;
        os << "key,value\n";
        const json flat = doc.flatten();
        for (const auto& [k, v] : flat.items())
            os << k << "," << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        text = os.str();
    } else {
        throw std::invalid_argument("--format must be json or csv");
    }
    if (!o.out.empty()) {
        std::ofstream f(o.out, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file " + o.out);
        f << text;
    } else {
        std::cout << text;
    }
}

json run_verify(const CommonOpts& o) {
    McConfig mc{o.samples, o.seed, 65536, 0};
    json lemmas = json::array();
    bool all_pass = true;
    auto add = [&](const LemmaReport& rep) {
        lemmas.push_back(lemma_json(rep));
        all_pass = all_pass && rep.pass;
    };

    for (const double a : {0.0, 1.0, 10.0})
        for (const double mu : {0.5, 1.0, 4.0}) add(mc_jensen_exponential(a, 1.0, mu, mc));
    for (const int dof : {2, 6, 100})
        for (const double a : {0.0, 1.0, 10.0}) add(mc_jensen_chisq(a, 1.0, dof, mc));
    for (const double x : {0.01, 1.0, 100.0}) add(mc_exp_reciprocal(x, 1.0, mc));

    for (const double rho_sq : {1e2, 1e3, 1e4}) {
        const ScaledNoiseReport rep = mc_scaled_noise_ratio(rho_sq, mc);
        json j = lemma_json(rep.base);
        j["closed_bound"] = rep.closed_bound;
        j["angular_estimate"] = rep.second_estimate;
        j["two_estimators_agree"] = rep.two_estimators_agree;
        j["log_gap_bits"] = rep.log_gap_bits;
        j["pass"] = rep.pass;
        j["rho_sq"] = rho_sq;
        lemmas.push_back(j);
        all_pass = all_pass && rep.pass;
    }

    const GradBoundReport grad = grad_bound_check(LinkStrengths{2.0, 8.0, 2.0}, 3, 1000, o.seed);
    lemmas.push_back(json{{"lemma", "grad_bound"},
                          {"max_norm_parallel", grad.max_norm_parallel},
                          {"norm_bound", grad.norm_bound},
                          {"pass", grad.pass}});
    all_pass = all_pass && grad.pass;

    const LogdetCheckResult det = logdet_identity_check(2, 4, o.seed, 100);
    lemmas.push_back(json{{"lemma", "logdet_identity"},
                          {"max_rel_err", det.max_rel_err},
                          {"pass", det.pass}});
    all_pass = all_pass && det.pass;

    bool ghat_ok = true;
    for (std::uint64_t i = 0; i < 1'000'000 && ghat_ok; ++i) {
        const cplx z = cgauss_at(4.0, rng::substream(o.seed, 0x77), i);
        const double m2 = std::norm(make_ghat(z));
        const double z2 = std::norm(z);
        ghat_ok = m2 >= 1.0 + z2 - 1e-12 * (1.0 + z2) &&
                  m2 <= 2.0 * (1.0 + z2) + 1e-12 * (1.0 + z2);
    }
    lemmas.push_back(json{{"lemma", "ghat_sandwich"}, {"pass", ghat_ok}});
    all_pass = all_pass && ghat_ok;

    McConfig mc7 = mc;
    mc7.samples = std::min<std::uint64_t>(o.samples, 400'000);
    const TrainScaleReport t7 = mc_train_scale_checks({1e2, 1e4, 1e6}, 3, mc7);
    lemmas.push_back(json{{"lemma", "train_scale_p2p"},
                          {"slope_scaling", t7.slope_scaling},
                          {"slope_assembly", t7.slope_assembly},
                          {"gaps_nonnegative", t7.gaps_nonnegative},
                          {"jensen_window", t7.jensen_window},
                          {"pass", t7.pass}});
    all_pass = all_pass && t7.pass;

    return json{{"lemmas", lemmas}, {"all_pass", all_pass}};
}

json run_repro_example() {
    const NetworkParams p{3, 4, 1, 2, 3, std::nullopt};
    const auto sel = gdof_relay_selection(p);
    const auto tr = gdof_training(p);
    const auto closed = solve_reduced_closed(p);
    const auto grid = solve_reduced_grid(p, 1001);
    const auto net = gdof_network(p);
    const double relay1 = (1.0 - 1.0 / p.T) * std::min(p.gamma_sr1, p.gamma_rd1);
    const double relay2 = (1.0 - 1.0 / p.T) * std::min(p.gamma_sr2, p.gamma_rd2);
    return json{
        {"simple_bound", gdof_simple_bound(p)},
        {"relay1", relay1},
        {"relay2", relay2},
        {"best_single_relay", sel.value},
        {"train1_times_T", tr.gamma1_train * p.T},
        {"train2_times_T_ub", tr.gamma2_train_ub * p.T},
        {"T_times_gdof_closed", std::min((p.T - 1.0) * p.gamma_sr1, closed.value)},
        {"T_times_gdof_grid", std::min((p.T - 1.0) * p.gamma_sr1, grid.value)},
        {"gdof", net.gdof},
        {"note", "the source text prints 5.33 for min{(T-1)sr1, optimizer value}; "
                 "direct evaluation gives 14/3 = 4.667, and the training comparison "
                 "4.667 > 4 > 3 is unaffected"}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Noncoherent two-relay diamond network toolkit"};
    app.require_subcommand(1);
    CommonOpts o;

    auto add_common = [&](CLI::App* cmd, bool with_gamma = true) {
        if (with_gamma) {
            cmd->add_option("--T", o.T, "coherence time (symbols per block)");
            cmd->add_option("--gamma", o.gamma, "exponents sr1,sr2,rd1,rd2")->required();
        }
        cmd->add_option("--snr-db", o.snr_db, "SNR in dB");
        cmd->add_option("--samples", o.samples, "Monte Carlo samples");
        cmd->add_option("--seed", o.seed, "RNG seed");
        cmd->add_option("--format", o.format, "json or csv");
        cmd->add_option("--out", o.out, "write output to this path");
        cmd->add_option("--grid-res", o.grid_res, "grid resolution for oracles");
    };

    auto* c_classify = app.add_subcommand("classify", "regime classification");
    add_common(c_classify);
    auto* c_gdof = app.add_subcommand("gdof", "network gDoF value");
    add_common(c_gdof);
    auto* c_solve = app.add_subcommand("solve", "closed-form and grid optimizers");
    add_common(c_solve);
    auto* c_lp = app.add_subcommand("lp", "discretized LP over the power grid");
    add_common(c_lp);
    double lp_step = 0.5, lp_max = -1.0;
    c_lp->add_option("--grid-step", lp_step, "grid spacing");
    c_lp->add_option("--grid-max", lp_max, "grid upper end (default 2T)");
    auto* c_sweep = app.add_subcommand("sweep", "bound evaluation across an SNR range");
    add_common(c_sweep);
    std::string sweep_scheme = "tsqmf";
    std::string sweep_snr = "60,70,80,90,100,110,120";
    c_sweep->add_option("--scheme", sweep_scheme, "tsqmf or cutset");
    c_sweep->add_option("--snr-db-list", sweep_snr, "comma-separated SNR points in dB");
    auto* c_verify = app.add_subcommand("verify", "Monte Carlo lemma suite");
    add_common(c_verify, false);
    auto* c_sim = app.add_subcommand("simulate", "sample the relay signal chain");
    add_common(c_sim);
    double sim_p = -1.0;
    c_sim->add_option("--p-lambda", sim_p, "time-sharing probability (default: optimizer)");
    auto* c_repro = app.add_subcommand("repro-example", "worked-example pipeline");
    add_common(c_repro, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 64;
    }

    try {
        if (c_classify->parsed()) {
            const NetworkParams p = parse_params(o);
            emit(o, "classify", &p, regime_json(classify(p)));
        } else if (c_gdof->parsed()) {
            const NetworkParams p = parse_params(o);
            const GdofResult r = gdof_network(p);
            json j{{"gdof", r.gdof},
                   {"regime", regime_json(r.regime)},
                   {"active_formula", r.active_formula},
                   {"relay_used", to_string(r.relay_used)}};
            if (!r.subregime.empty()) j["subregime"] = r.subregime;
            emit(o, "gdof", &p, j);
        } else if (c_solve->parsed()) {
            const NetworkParams given = parse_params(o);
            const auto [p, swapped] = canonicalize(given);
            const OptSolution closed = solve_reduced_closed(p);
            const OptSolution grid = solve_reduced_grid(p, o.grid_res);
            auto sol_json = [](const OptSolution& s) {
                json j{{"p_lambda", s.p_lambda},
                       {"gamma_c", s.gamma_c},
                       {"value", s.value},
                       {"active_term", to_string(s.active_term)}};
                if (s.c_r12_sq) j["c_r12_sq"] = *s.c_r12_sq;
                return j;
            };
            emit(o, "solve", &given,
                 json{{"closed_form", sol_json(closed)},
                      {"grid", sol_json(grid)},
                      {"grid_resolution", o.grid_res},
                      {"relays_relabeled", swapped}});
        } else if (c_lp->parsed()) {
            const NetworkParams p = parse_params(o, true);
            if (lp_max <= 0.0) lp_max = 2.0 * p.T;
            const LpSolution lp = solve_discretized_lp(link_strengths(p), p.T, lp_step, lp_max);
            json pts = json::array();
            for (const auto& pt : lp.dist.points)
                pts.push_back(json{{"a2", pt.a2}, {"b2", pt.b2}, {"c2", pt.c2}, {"p", pt.p}});
            emit(o, "lp", &p,
                 json{{"value", lp.value},
                      {"support", pts},
                      {"support_size", lp.support_size},
                      {"iterations", lp.iterations}});
        } else if (c_sweep->parsed()) {
            const NetworkParams p = parse_params(o);
            std::vector<double> db;
            std::stringstream ss(sweep_snr);
            std::string tok;
            while (std::getline(ss, tok, ',')) db.push_back(std::stod(tok));
            const SweepScheme scheme =
                sweep_scheme == "cutset" ? SweepScheme::Cutset : SweepScheme::Tsqmf;
            std::string csv_path = o.out;
            const SweepResult res = sweep_slope(p, db, scheme, csv_path);
            if (res.narrow_range_warning)
                std::cerr << "warning: SNR range spans less than two decades; widen it "
                             "for a reliable slope fit\n";
            json rows = json::array();
            for (const auto& row : res.rows) {
                json terms;
                for (const auto& [name, value] : row.terms) terms[name] = value;
                rows.push_back(json{{"snr_db", row.snr_db},
                                    {"snr", row.snr},
                                    {"terms", terms},
                                    {"binding", row.binding},
                                    {"rate_per_symbol", row.rate_per_symbol}});
            }
            CommonOpts stdout_opts = o;
            stdout_opts.out.clear();  // CSV already went to --out; JSON to stdout
            emit(stdout_opts, "sweep", &p,
                 json{{"scheme", res.scheme},
                      {"rows", rows},
                      {"fitted_slope", res.fitted_slope},
                      {"slope_target", res.slope_target},
                      {"rel_error", res.rel_error},
                      {"narrow_range_warning", res.narrow_range_warning},
                      {"csv", csv_path}});
        } else if (c_verify->parsed()) {
            emit(o, "verify", nullptr, run_verify(o));
        } else if (c_sim->parsed()) {
            const NetworkParams p = parse_params(o, true);
            OperatingPoint op;
            if (sim_p >= 0.0) {
                op.p_lambda = sim_p;
                op.c_r12_sq = 0.0;
            } else {
                op = tsqmf_operating_point(p, p.snr_value());
            }
            const TsqmfCoeffs coeffs{std::sqrt(op.c_r12_sq), 1.0, 1.0, 0.0};
            McConfig mc{std::min<std::uint64_t>(o.samples, 100'000), o.seed, 4096, 0};
            const auto gain1 = mc_estimate(mc, [&](std::uint64_t i) {
                const TsqmfBlock blk = sim_tsqmf_block(p, op.p_lambda, coeffs, o.seed, i);
                return std::norm(blk.r1.g / blk.r1.ghat);
            });
            const auto src_power = mc_estimate(mc, [&](std::uint64_t i) {
                const TsqmfBlock blk = sim_tsqmf_block(p, op.p_lambda, coeffs, o.seed, i);
                double pw = 0.0;
                for (const auto& z : blk.x_source) pw += std::norm(z);
                return pw / (p.T - 1);
            });
            emit(o, "simulate", &p,
                 json{{"p_lambda", op.p_lambda},
                      {"c_r12_sq", op.c_r12_sq},
                      {"mean_scaling_gain_r1", gain1.mean},
                      {"scaling_gain_se", gain1.std_error},
                      {"mean_source_power", src_power.mean},
                      {"blocks", mc.samples}});
        } else if (c_repro->parsed()) {
            emit(o, "repro-example", nullptr, run_repro_example());
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
