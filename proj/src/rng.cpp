#include "diamond/rng.hpp"

#include <stdexcept>

namespace diamond {

std::vector<cplx> sample_cgauss(double variance, std::size_t n, std::uint64_t seed) {
    if (variance < 0) throw std::invalid_argument("sample_cgauss: variance must be >= 0");
    std::vector<cplx> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = cgauss_at(variance, seed, i);
    return out;
}

std::vector<double> sample_half_chisq(int dof, std::size_t n, std::uint64_t seed) {
    if (dof < 2 || dof % 2 != 0)
        throw std::invalid_argument("sample_half_chisq: dof must be even and >= 2");
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = half_chisq_at(dof, seed, i);
    return out;
}

std::vector<cplx> sample_isotropic_unit_vector(std::size_t dim, std::uint64_t seed,
                                               std::uint64_t index) {
    if (dim == 0) throw std::invalid_argument("sample_isotropic_unit_vector: dim must be >= 1");
    std::vector<cplx> v(dim);
    double norm_sq = 0.0;
    for (std::size_t k = 0; k < dim; ++k) {
        v[k] = cgauss_at(1.0, seed, index * dim + k);
        norm_sq += std::norm(v[k]);
    }
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (auto& z : v) z *= inv;
    return v;
}

}  // namespace diamond
