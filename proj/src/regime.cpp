#include "diamond/regime.hpp"

#include <array>
#include <stdexcept>

namespace diamond {

namespace {

// Permutation k lists link ids (1=sr1, 2=sr2, 3=rd1, 4=rd2) in decreasing
// exponent order; index 1 is gamma_sr1 >= gamma_sr2 >= gamma_rd1 >= gamma_rd2.
constexpr std::array<std::array<int, 4>, 24> kOrderings = {{
    {1, 2, 3, 4}, {1, 2, 4, 3}, {1, 3, 2, 4}, {1, 3, 4, 2}, {1, 4, 2, 3}, {1, 4, 3, 2},
    {2, 1, 3, 4}, {2, 1, 4, 3}, {2, 3, 1, 4}, {2, 3, 4, 1}, {2, 4, 1, 3}, {2, 4, 3, 1},
    {3, 1, 2, 4}, {3, 1, 4, 2}, {3, 2, 1, 4}, {3, 2, 4, 1}, {3, 4, 1, 2}, {3, 4, 2, 1},
    {4, 1, 2, 3}, {4, 1, 3, 2}, {4, 2, 1, 3}, {4, 2, 3, 1}, {4, 3, 1, 2}, {4, 3, 2, 1},
}};

struct RegimeRow {
    RegimeKind kind;
    int relay;
    bool swapped;
};

// Row assignment per permutation index (canonical regimes and the relay-
// relabeled mirror regimes).
RegimeRow row_for_index(int idx) {
    switch (idx) {
        // gamma_rd1 >= gamma_sr1 >= gamma_sr2: select R1, source link limits
        case 13: case 14: case 17: case 23:
            return {RegimeKind::RelaySelectSrLimited, 1, false};
        // gamma_sr1 >= gamma_rd1 >= gamma_rd2: select R1, destination link limits
        case 1: case 3: case 4: case 7:
            return {RegimeKind::RelaySelectRdLimited, 1, false};
        // nontrivial regime, canonical orientation
        case 5: case 6: case 19: case 20:
            return {RegimeKind::Nontrivial, 0, false};
        // mirrors of the above with relays relabeled
        case 18: case 21: case 22: case 24:
            return {RegimeKind::RelaySelectSrLimited, 2, true};
        case 2: case 8: case 11: case 12:
            return {RegimeKind::RelaySelectRdLimited, 2, true};
        case 9: case 10: case 15: case 16:
            return {RegimeKind::Nontrivial, 0, true};
        default:
            throw std::logic_error("regime: bad permutation index");
    }
}

double gamma_of(const NetworkParams& p, int link_id) {
    switch (link_id) {
        case 1: return p.gamma_sr1;
        case 2: return p.gamma_sr2;
        case 3: return p.gamma_rd1;
        case 4: return p.gamma_rd2;
    }
    throw std::logic_error("regime: bad link id");
}

bool ordering_holds(const NetworkParams& p, const std::array<int, 4>& perm) {
    for (int i = 0; i < 3; ++i)
        if (gamma_of(p, perm[i]) < gamma_of(p, perm[i + 1])) return false;
    return true;
}

}  // namespace

Regime classify(const NetworkParams& params) {
    params.validate();
    int best_idx = 0;
    RegimeRow best_row{};
    bool have_select = false;
    for (int idx = 1; idx <= 24; ++idx) {
        if (!ordering_holds(params, kOrderings[idx - 1])) continue;
        const RegimeRow row = row_for_index(idx);
        const bool is_select = row.kind != RegimeKind::Nontrivial;
        if (best_idx == 0 || (is_select && !have_select)) {
            best_idx = idx;
            best_row = row;
            have_select = is_select;
        }
    }
    if (best_idx == 0) throw std::logic_error("classify: no ordering matched");
    return Regime{best_row.kind, best_row.relay, best_row.swapped, best_idx};
}

std::pair<NetworkParams, bool> canonicalize(const NetworkParams& params) {
    const Regime r = classify(params);
    if (r.swapped) return {params.with_swapped_relays(), true};
    return {params, false};
}

bool in_nontrivial_regime(const NetworkParams& params) {
    return params.gamma_sr1 >= params.gamma_sr2 && params.gamma_sr1 >= params.gamma_rd1 &&
           params.gamma_rd2 >= params.gamma_rd1 && params.gamma_rd2 >= params.gamma_sr2;
}

std::string to_string(RegimeKind kind) {
    switch (kind) {
        case RegimeKind::RelaySelectSrLimited: return "relay_select_sr_limited";
        case RegimeKind::RelaySelectRdLimited: return "relay_select_rd_limited";
        case RegimeKind::Nontrivial: return "nontrivial";
    }
    return "unknown";
}

}  // namespace diamond
