#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "diamond/bounds.hpp"
#include "diamond/gdof.hpp"
#include "diamond/mclab.hpp"
#include "diamond/optim.hpp"
#include "diamond/params.hpp"
#include "diamond/regime.hpp"
#include "diamond/rng.hpp"
#include "diamond/special.hpp"
#include "diamond/sweep.hpp"

namespace py = pybind11;
using namespace diamond;

PYBIND11_MODULE(_ncdiamond, m) {
    m.doc() = "Noncoherent two-relay diamond network toolkit";

    py::class_<NetworkParams>(m, "NetworkParams")
        .def(py::init([](int T, double sr1, double sr2, double rd1, double rd2,
                         std::optional<double> snr) {
                 NetworkParams p{T, sr1, sr2, rd1, rd2, snr};
                 p.validate();
                 return p;
             }),
             py::arg("T"), py::arg("gamma_sr1"), py::arg("gamma_sr2"), py::arg("gamma_rd1"),
             py::arg("gamma_rd2"), py::arg("snr") = std::nullopt)
        .def_readwrite("T", &NetworkParams::T)
        .def_readwrite("gamma_sr1", &NetworkParams::gamma_sr1)
        .def_readwrite("gamma_sr2", &NetworkParams::gamma_sr2)
        .def_readwrite("gamma_rd1", &NetworkParams::gamma_rd1)
        .def_readwrite("gamma_rd2", &NetworkParams::gamma_rd2)
        .def_readwrite("snr", &NetworkParams::snr)
        .def("with_snr", &NetworkParams::with_snr)
        .def("with_swapped_relays", &NetworkParams::with_swapped_relays);

    py::class_<McConfig>(m, "McConfig")
        .def(py::init([](std::uint64_t samples, std::uint64_t seed, std::uint64_t chunk,
                         int threads) {
                 McConfig cfg{samples, seed, chunk, threads};
                 cfg.validate();
                 return cfg;
             }),
             py::arg("samples") = 1'000'000, py::arg("seed") = 0, py::arg("chunk") = 65536,
             py::arg("threads") = 0);

    py::enum_<RegimeKind>(m, "RegimeKind")
        .value("RELAY_SELECT_SR_LIMITED", RegimeKind::RelaySelectSrLimited)
        .value("RELAY_SELECT_RD_LIMITED", RegimeKind::RelaySelectRdLimited)
        .value("NONTRIVIAL", RegimeKind::Nontrivial);

    py::class_<Regime>(m, "Regime")
        .def_readonly("kind", &Regime::kind)
        .def_readonly("selected_relay", &Regime::selected_relay)
        .def_readonly("swapped", &Regime::swapped)
        .def_readonly("permutation_index", &Regime::permutation_index);

    py::class_<GdofResult>(m, "GdofResult")
        .def_readonly("gdof", &GdofResult::gdof)
        .def_readonly("regime", &GdofResult::regime)
        .def_readonly("active_formula", &GdofResult::active_formula)
        .def_readonly("subregime", &GdofResult::subregime);

    py::class_<OptSolution>(m, "OptSolution")
        .def_readonly("p_lambda", &OptSolution::p_lambda)
        .def_readonly("gamma_c", &OptSolution::gamma_c)
        .def_readonly("c_r12_sq", &OptSolution::c_r12_sq)
        .def_readonly("value", &OptSolution::value);

    py::class_<MassPoint>(m, "MassPoint")
        .def(py::init([](double a2, double b2, double c2, double p) {
                 return MassPoint{a2, b2, c2, p};
             }),
             py::arg("a2"), py::arg("b2"), py::arg("c2"), py::arg("p"))
        .def_readonly("a2", &MassPoint::a2)
        .def_readonly("b2", &MassPoint::b2)
        .def_readonly("c2", &MassPoint::c2)
        .def_readonly("p", &MassPoint::p);

    py::class_<MassPointDistribution>(m, "MassPointDistribution")
        .def(py::init([](const std::vector<MassPoint>& pts) {
                 MassPointDistribution d;
                 d.points = pts;
                 d.validate();
                 return d;
             }),
             py::arg("points"))
        .def_readonly("points", &MassPointDistribution::points)
        .def("mean_power", &MassPointDistribution::mean_power);

    py::class_<RateReport>(m, "RateReport")
        .def_readonly("terms", &RateReport::terms)
        .def_readonly("binding", &RateReport::binding)
        .def_readonly("rate_per_symbol", &RateReport::rate_per_symbol)
        .def_readonly("snr", &RateReport::snr);

    py::class_<LemmaReport>(m, "LemmaReport")
        .def_readonly("lemma_id", &LemmaReport::lemma_id)
        .def_readonly("lhs_estimate", &LemmaReport::lhs_estimate)
        .def_readonly("std_error", &LemmaReport::std_error)
        .def_readonly("bound_lo", &LemmaReport::bound_lo)
        .def_readonly("bound_hi", &LemmaReport::bound_hi)
        .def_readonly("pass_", &LemmaReport::pass)
        .def_readonly("samples", &LemmaReport::samples);

    py::class_<LpSolution>(m, "LpSolution")
        .def_readonly("dist", &LpSolution::dist)
        .def_readonly("value", &LpSolution::value)
        .def_readonly("support_size", &LpSolution::support_size);

    m.def("classify", &classify, py::arg("params"));
    m.def("regime_kind_name", [](RegimeKind k) { return to_string(k); });
    m.def("canonicalize",
          [](const NetworkParams& p) {
              const auto [canon, swapped] = diamond::canonicalize(p);
              return py::make_tuple(canon, swapped);
          },
          py::arg("params"));
    m.def("gdof_simple_bound", &gdof_simple_bound, py::arg("params"));
    m.def("gdof_relay_selection",
          [](const NetworkParams& p) {
              const auto r = gdof_relay_selection(p);
              return py::make_tuple(r.value, r.relay);
          },
          py::arg("params"));
    m.def("gdof_nontrivial",
          [](const NetworkParams& p) {
              const auto r = gdof_nontrivial(p);
              return py::make_tuple(r.value, r.subregime);
          },
          py::arg("params"));
    m.def("gdof_training",
          [](const NetworkParams& p) {
              const auto r = gdof_training(p);
              return py::make_tuple(r.gamma1_train, r.gamma2_train_ub);
          },
          py::arg("params"));
    m.def("gdof_network", &gdof_network, py::arg("params"));

    m.def("reduced_objective",
          [](double p_lambda, double gamma_c, const NetworkParams& p) {
              const auto t = reduced_objective(p_lambda, gamma_c, p);
              return py::make_tuple(t.term1, t.term2, t.min_value);
          },
          py::arg("p_lambda"), py::arg("gamma_c"), py::arg("params"));
    m.def("solve_reduced_closed", &solve_reduced_closed, py::arg("params"));
    m.def("solve_reduced_grid", &solve_reduced_grid, py::arg("params"), py::arg("resolution") = 1001);
    m.def("solve_discretized_lp",
          [](double rho_rd1_sq, double rho_rd2_sq, double rho_sr2_sq, int T, double step,
             double max) {
              return solve_discretized_lp(LinkStrengths{rho_rd1_sq, rho_rd2_sq, rho_sr2_sq}, T, step, max);
          },
          py::arg("rho_rd1_sq"), py::arg("rho_rd2_sq"), py::arg("rho_sr2_sq"), py::arg("T"),
          py::arg("grid_step"), py::arg("grid_max"));

    m.def("miso_cut_value", &miso_cut_value, py::arg("dist"), py::arg("rho_rd1_sq"), py::arg("rho_rd2_sq"),
          py::arg("T"));
    m.def("parallel_cut_value", &parallel_cut_value, py::arg("dist"), py::arg("rho_rd1_sq"), py::arg("rho_rd2_sq"),
          py::arg("T"));
    m.def("cutset_objective", &cutset_objective, py::arg("dist"), py::arg("params"));
    m.def("tsqmf_rate_bound", &tsqmf_rate_bound, py::arg("params"), py::arg("p_lambda"),
          py::arg("c_r12_sq"));

    m.def("exp_integral_e1", &exp_integral_e1, py::arg("x"));
    m.def("sample_cgauss", &sample_cgauss, py::arg("variance"), py::arg("n"), py::arg("seed"));
    m.def("sample_half_chisq", &sample_half_chisq, py::arg("dof"), py::arg("n"), py::arg("seed"));
    m.def("sample_isotropic_unit_vector", &sample_isotropic_unit_vector, py::arg("dim"),
          py::arg("seed"), py::arg("index") = 0);
    m.def("make_ghat", &make_ghat, py::arg("g_plus_w"));

    m.def("mc_jensen_exponential", &mc_jensen_exponential, py::arg("a"), py::arg("b"),
          py::arg("mu"), py::arg("mc"));
    m.def("mc_jensen_chisq", &mc_jensen_chisq, py::arg("a"), py::arg("b"), py::arg("dof"),
          py::arg("mc"));
    m.def("mc_exp_reciprocal", &mc_exp_reciprocal, py::arg("b"), py::arg("mu"), py::arg("mc"));
    m.def("mc_scaled_noise_ratio",
          [](double rho_sq, const McConfig& mc) {
              const auto rep = mc_scaled_noise_ratio(rho_sq, mc);
              py::dict d;
              d["estimate"] = rep.base.lhs_estimate;
              d["std_error"] = rep.base.std_error;
              d["closed_bound"] = rep.closed_bound;
              d["log_gap_bits"] = rep.log_gap_bits;
              d["two_estimators_agree"] = rep.two_estimators_agree;
              d["pass"] = rep.pass;
              return d;
          },
          py::arg("rho_sq"), py::arg("mc"));

    m.def("sweep_slope",
          [](const NetworkParams& p, const std::vector<double>& db, const std::string& scheme,
             const std::string& out) {
              const SweepResult r = sweep_slope(
                  p, db, scheme == "cutset" ? SweepScheme::Cutset : SweepScheme::Tsqmf, out);
              py::dict d;
              d["fitted_slope"] = r.fitted_slope;
              d["slope_target"] = r.slope_target;
              d["rel_error"] = r.rel_error;
              d["narrow_range_warning"] = r.narrow_range_warning;
              return d;
          },
          py::arg("params"), py::arg("snr_db_list"), py::arg("scheme") = "tsqmf",
          py::arg("out_csv_path") = "");

    m.attr("__version__") = "0.1.0";
}
