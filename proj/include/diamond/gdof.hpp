#pragma once

#include <string>

#include "diamond/params.hpp"
#include "diamond/regime.hpp"

namespace diamond {

enum class RelayUse { None, R1, R2, Both };

struct GdofResult {
    double gdof = 0.0;  // bits per symbol per log2(SNR)
    Regime regime;
    std::string active_formula;
    RelayUse relay_used = RelayUse::None;
    std::string subregime;  // "1", "2.1" or "2.2" when nontrivial, else empty
};

/// Loose outer bound (1-1/T) * min{max(sr exponents), max(rd exponents)}.
double gdof_simple_bound(const NetworkParams& params);

struct RelaySelectionGdof {
    double value = 0.0;
    int relay = 1;
};

/// Best single-relay decode-and-forward value:
/// (1-1/T) * max{min(sr1,rd1), min(sr2,rd2)}; ties pick relay 1.
RelaySelectionGdof gdof_relay_selection(const NetworkParams& params);

struct NontrivialGdof {
    double value = 0.0;
    std::string subregime;  // "1", "2.1", "2.2"
};

/// Time-sharing gDoF value in the canonical nontrivial regime. Precondition:
/// in_nontrivial_regime(params). At subregime boundaries the adjacent
/// formulas are required to agree within 1e-9.
NontrivialGdof gdof_nontrivial(const NetworkParams& params);

struct TrainingGdof {
    double gamma1_train = 0.0;     // best single-relay value with per-link training
    double gamma2_train_ub = 0.0;  // coherent upper bound when both relays train
};

/// Per-symbol gDoF of training-based schemes (multiply by T for block values).
TrainingGdof gdof_training(const NetworkParams& params);

/// Network-level dispatch: relay-selection value in the simple regimes,
/// min{(1-1/T)*gamma_sr1, nontrivial value} otherwise (both the reduced outer
/// bound and the achievable scheme carry the gamma_sr1 cap).
GdofResult gdof_network(const NetworkParams& params);

std::string to_string(RelayUse relay);

}  // namespace diamond
