#include "diamond/params.hpp"

#include <cmath>
#include <stdexcept>

namespace diamond {

void NetworkParams::validate() const {
    if (T < 1) throw std::invalid_argument("NetworkParams: T must be >= 1");
    if (gamma_sr1 < 0 || gamma_sr2 < 0 || gamma_rd1 < 0 || gamma_rd2 < 0)
        throw std::invalid_argument("NetworkParams: SNR exponents must be nonnegative");
    if (!(std::isfinite(gamma_sr1) && std::isfinite(gamma_sr2) && std::isfinite(gamma_rd1) &&
          std::isfinite(gamma_rd2)))
        throw std::invalid_argument("NetworkParams: SNR exponents must be finite");
    if (snr && !(*snr > 1.0 && std::isfinite(*snr)))
        throw std::invalid_argument("NetworkParams: snr must be finite and > 1");
}

NetworkParams NetworkParams::with_swapped_relays() const {
    NetworkParams p = *this;
    p.gamma_sr1 = gamma_sr2;
    p.gamma_sr2 = gamma_sr1;
    p.gamma_rd1 = gamma_rd2;
    p.gamma_rd2 = gamma_rd1;
    return p;
}

NetworkParams NetworkParams::with_snr(double snr_linear) const {
    NetworkParams p = *this;
    p.snr = snr_linear;
    p.validate();
    return p;
}

double NetworkParams::snr_value() const {
    if (!snr) throw std::invalid_argument("NetworkParams: operation requires a finite SNR");
    return *snr;
}

double NetworkParams::rho_sr1_sq() const { return std::pow(snr_value(), gamma_sr1); }
double NetworkParams::rho_sr2_sq() const { return std::pow(snr_value(), gamma_sr2); }
double NetworkParams::rho_rd1_sq() const { return std::pow(snr_value(), gamma_rd1); }
double NetworkParams::rho_rd2_sq() const { return std::pow(snr_value(), gamma_rd2); }

void McConfig::validate() const {
    if (samples == 0) throw std::invalid_argument("McConfig: samples must be positive");
    if (chunk == 0) throw std::invalid_argument("McConfig: chunk must be positive");
    if (threads < 0) throw std::invalid_argument("McConfig: threads must be >= 0");
}

}  // namespace diamond
