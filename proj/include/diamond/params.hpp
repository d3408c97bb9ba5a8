#pragma once

#include <cstdint>
#include <optional>

namespace diamond {

/// Coherence time and the four per-link SNR exponents of the two-relay
/// diamond network, plus an optional finite SNR for numeric evaluation.
/// Link strengths derive as rho^2 = snr^gamma.
struct NetworkParams {
    int T = 2;
    double gamma_sr1 = 0.0;
    double gamma_sr2 = 0.0;
    double gamma_rd1 = 0.0;
    double gamma_rd2 = 0.0;
    std::optional<double> snr;  // linear scale, > 1 when present

    void validate() const;  // throws std::invalid_argument

    NetworkParams with_swapped_relays() const;  // sr1<->sr2, rd1<->rd2
    NetworkParams with_snr(double snr_linear) const;

    bool has_snr() const { return snr.has_value(); }
    double snr_value() const;  // throws if absent

    double rho_sr1_sq() const;
    double rho_sr2_sq() const;
    double rho_rd1_sq() const;
    double rho_rd2_sq() const;
};

/// Monte Carlo execution settings. Identical (samples, seed, chunk) give
/// bit-identical estimates no matter how many threads run the chunks.
struct McConfig {
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 0;
    std::uint64_t chunk = 65536;
    int threads = 0;  // 0 = hardware concurrency; never affects the result

    void validate() const;
};

}  // namespace diamond
