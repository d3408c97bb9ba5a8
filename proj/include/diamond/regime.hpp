#pragma once

#include <string>
#include <utility>

#include "diamond/params.hpp"

namespace diamond {

enum class RegimeKind {
    RelaySelectSrLimited,  // bottleneck is the selected relay's source link
    RelaySelectRdLimited,  // bottleneck is the selected relay's destination link
    Nontrivial,            // both relays needed; time-sharing solution applies
};

struct Regime {
    RegimeKind kind = RegimeKind::Nontrivial;
    int selected_relay = 0;  // 1 or 2 for relay selection, 0 for nontrivial
    bool swapped = false;    // relay labels exchanged to reach canonical form
    int permutation_index = 0;  // 1..24, ordering of the four exponents
};

/// Classify the exponent ordering into the regime taxonomy. Ties resolve
/// toward relay selection first, then toward the lowest permutation index.
Regime classify(const NetworkParams& params);

/// Exchange relay labels when needed so the regime is in canonical (unswapped)
/// form; returns the possibly-swapped params and whether a swap happened.
std::pair<NetworkParams, bool> canonicalize(const NetworkParams& params);

/// Canonical nontrivial-regime condition:
/// gamma_sr1 >= gamma_sr2, gamma_sr1 >= gamma_rd1,
/// gamma_rd2 >= gamma_rd1, gamma_rd2 >= gamma_sr2.
bool in_nontrivial_regime(const NetworkParams& params);

std::string to_string(RegimeKind kind);

}  // namespace diamond
