#include "diamond/gdof.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace diamond {

namespace {

double prefactor(int T) { return 1.0 - 1.0 / static_cast<double>(T); }

double subregime1_value(const NetworkParams& p) {
    const double cross = p.gamma_rd2 > 0 ? p.gamma_sr2 * p.gamma_rd1 / p.gamma_rd2 : 0.0;
    return prefactor(p.T) * (p.gamma_sr2 + p.gamma_rd1 - cross);
}

double subregime21_value(const NetworkParams& p) {
    const double d = p.gamma_rd2 - p.gamma_rd1;
    const double cross = d > 0 ? p.gamma_sr2 * p.gamma_rd1 / d : 0.0;
    return prefactor(p.T) * (p.gamma_sr2 + p.gamma_rd1) - cross / p.T;
}

double subregime22_value(const NetworkParams& p) {
    return p.gamma_sr2 / p.T + (1.0 - 2.0 / p.T) * p.gamma_rd2;
}

}  // namespace

double gdof_simple_bound(const NetworkParams& params) {
    params.validate();
    const double sr = std::max(params.gamma_sr1, params.gamma_sr2);
    const double rd = std::max(params.gamma_rd1, params.gamma_rd2);
    return prefactor(params.T) * std::min(sr, rd);
}

RelaySelectionGdof gdof_relay_selection(const NetworkParams& params) {
    params.validate();
    const double v1 = std::min(params.gamma_sr1, params.gamma_rd1);
    const double v2 = std::min(params.gamma_sr2, params.gamma_rd2);
    RelaySelectionGdof out;
    out.relay = v2 > v1 ? 2 : 1;
    out.value = prefactor(params.T) * std::max(v1, v2);
    return out;
}

NontrivialGdof gdof_nontrivial(const NetworkParams& params) {
    params.validate();
    if (!in_nontrivial_regime(params))
        throw std::invalid_argument("gdof_nontrivial: params outside the nontrivial regime");

    const double split = (params.T - 2) * params.gamma_rd2 - (params.T - 1) * params.gamma_rd1;
    constexpr double kBoundaryEps = 1e-12;
    constexpr double kAgreeEps = 1e-9;

    NontrivialGdof out;
    if (split <= 0.0) {
        out.subregime = "1";
        out.value = subregime1_value(params);
        if (std::fabs(split) <= kBoundaryEps) {
            const double other = params.gamma_rd2 > params.gamma_sr2 + params.gamma_rd1
                                     ? subregime21_value(params)
                                     : subregime22_value(params);
            if (std::fabs(other - out.value) > kAgreeEps)
                throw std::logic_error("gdof_nontrivial: boundary formulas disagree");
        }
    } else if (params.gamma_rd2 > params.gamma_sr2 + params.gamma_rd1) {
        out.subregime = "2.1";
        out.value = subregime21_value(params);
    } else {
        out.subregime = "2.2";
        out.value = subregime22_value(params);
        const double gap = params.gamma_sr2 + params.gamma_rd1 - params.gamma_rd2;
        if (std::fabs(gap) <= kBoundaryEps &&
            std::fabs(subregime21_value(params) - out.value) > kAgreeEps)
            throw std::logic_error("gdof_nontrivial: boundary formulas disagree");
    }
    return out;
}

TrainingGdof gdof_training(const NetworkParams& params) {
    params.validate();
    if (params.T < 2) throw std::invalid_argument("gdof_training: requires T >= 2");
    const double Tm1 = params.T - 1;
    const double Tm2 = params.T - 2;
    TrainingGdof out;
    out.gamma1_train = Tm1 *
                       std::max(std::min(params.gamma_sr1, params.gamma_rd1),
                                std::min(params.gamma_sr2, params.gamma_rd2)) /
                       params.T;
    const double both = std::min({Tm1 * params.gamma_sr1, Tm2 * params.gamma_rd2,
                                  Tm1 * params.gamma_sr2 + Tm2 * params.gamma_rd1,
                                  Tm1 * params.gamma_sr1 + Tm2 * params.gamma_rd2});
    out.gamma2_train_ub = both / params.T;
    return out;
}

GdofResult gdof_network(const NetworkParams& params) {
    params.validate();
    GdofResult out;
    out.regime = classify(params);
    const NetworkParams canon = out.regime.swapped ? params.with_swapped_relays() : params;

    switch (out.regime.kind) {
        case RegimeKind::RelaySelectSrLimited:
            out.gdof = prefactor(params.T) * canon.gamma_sr1;
            out.active_formula = "relay_selection_sr";
            out.relay_used = out.regime.selected_relay == 1 ? RelayUse::R1 : RelayUse::R2;
            break;
        case RegimeKind::RelaySelectRdLimited:
            out.gdof = prefactor(params.T) * canon.gamma_rd1;
            out.active_formula = "relay_selection_rd";
            out.relay_used = out.regime.selected_relay == 1 ? RelayUse::R1 : RelayUse::R2;
            break;
        case RegimeKind::Nontrivial: {
            const NontrivialGdof nt = gdof_nontrivial(canon);
            const double cap = prefactor(params.T) * canon.gamma_sr1;
            out.subregime = nt.subregime;
            if (cap < nt.value) {
                out.gdof = cap;
                out.active_formula = "sr1_cap";
            } else {
                out.gdof = nt.value;
                out.active_formula = "time_sharing_sub" + nt.subregime;
            }
            out.relay_used = RelayUse::Both;
            break;
        }
    }
    return out;
}

std::string to_string(RelayUse relay) {
    switch (relay) {
        case RelayUse::None: return "none";
        case RelayUse::R1: return "1";
        case RelayUse::R2: return "2";
        case RelayUse::Both: return "both";
    }
    return "unknown";
}

}  // namespace diamond
