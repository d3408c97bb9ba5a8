#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <thread>
#include <vector>

#include "diamond/params.hpp"

namespace diamond {

using cplx = std::complex<double>;

namespace rng {

// Counter-based generator: the i-th output of a splitmix64 stream started at
// `seed`. Every variate below is a pure function of (seed, index), so any
// chunking or thread schedule reproduces the serial stream bit-exactly.
inline std::uint64_t at(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Uniform draw in (0,1]; safe as a log() argument.
inline double uniform(std::uint64_t seed, std::uint64_t index) {
    return static_cast<double>((at(seed, index) >> 11) + 1) * 0x1.0p-53;
}

/// Derive an independent stream for a named sub-purpose.
inline std::uint64_t substream(std::uint64_t seed, std::uint64_t tag) {
    return at(seed ^ 0xA02BDBF7BB3C0A7ull, tag);
}

}  // namespace rng

/// One CN(0, variance) draw: real and imaginary parts each N(0, variance/2),
/// |z|^2 exponential with mean `variance`. Consumes uniforms 2*index, 2*index+1.
inline cplx cgauss_at(double variance, std::uint64_t seed, std::uint64_t index) {
    const double u1 = rng::uniform(seed, 2 * index);
    const double u2 = rng::uniform(seed, 2 * index + 1);
    const double r = std::sqrt(-variance * std::log(u1));
    const double phi = 6.283185307179586476925286766559 * u2;
    return {r * std::cos(phi), r * std::sin(phi)};
}

std::vector<cplx> sample_cgauss(double variance, std::size_t n, std::uint64_t seed);

/// One draw of (1/2)*chi^2(dof), dof even: sum of dof/2 unit exponentials.
/// Consumes uniforms [index*dof/2, (index+1)*dof/2).
inline double half_chisq_at(int dof, std::uint64_t seed, std::uint64_t index) {
    const std::uint64_t k = static_cast<std::uint64_t>(dof / 2);
    double s = 0.0;
    for (std::uint64_t j = 0; j < k; ++j)
        s -= std::log(rng::uniform(seed, index * k + j));
    return s;
}

std::vector<double> sample_half_chisq(int dof, std::size_t n, std::uint64_t seed);

/// Isotropically distributed complex unit vector of the given dimension
/// (normalized i.i.d. CN(0,1) draws). `index` selects independent samples.
std::vector<cplx> sample_isotropic_unit_vector(std::size_t dim, std::uint64_t seed,
                                               std::uint64_t index = 0);

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t samples = 0;
};

/// Chunk-deterministic Monte Carlo mean of f(i), i in [0, cfg.samples).
/// Partial sums are produced per chunk and combined in chunk order, so the
/// result is bit-identical for any thread count.
template <class F>
McEstimate mc_estimate(const McConfig& cfg, F&& f) {
    cfg.validate();
    const std::uint64_t n = cfg.samples;
    const std::uint64_t chunk = cfg.chunk;
    const std::uint64_t nchunks = (n + chunk - 1) / chunk;
    std::vector<double> sums(nchunks, 0.0), sqsums(nchunks, 0.0);

    auto run_chunk = [&](std::uint64_t c) {
        const std::uint64_t lo = c * chunk;
        const std::uint64_t hi = std::min(n, lo + chunk);
        double s = 0.0, s2 = 0.0;
        for (std::uint64_t i = lo; i < hi; ++i) {
            const double v = f(i);
            s += v;
            s2 += v * v;
        }
        sums[c] = s;
        sqsums[c] = s2;
    };

    unsigned nthreads = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads)
                                        : std::max(1u, std::thread::hardware_concurrency());
    nthreads = static_cast<unsigned>(std::min<std::uint64_t>(nthreads, nchunks));
    if (nthreads <= 1) {
        for (std::uint64_t c = 0; c < nchunks; ++c) run_chunk(c);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(nthreads);
        for (unsigned t = 0; t < nthreads; ++t) {
            pool.emplace_back([&, t]() {
                for (std::uint64_t c = t; c < nchunks; c += nthreads) run_chunk(c);
            });
        }
        for (auto& th : pool) th.join();
    }

    double s = 0.0, s2 = 0.0;
    for (std::uint64_t c = 0; c < nchunks; ++c) {
        s += sums[c];
        s2 += sqsums[c];
    }
    const double mean = s / static_cast<double>(n);
    double var = s2 / static_cast<double>(n) - mean * mean;
    if (n > 1) var *= static_cast<double>(n) / static_cast<double>(n - 1);
    var = std::max(var, 0.0);
    return {mean, std::sqrt(var / static_cast<double>(n)), n};
}

}  // namespace diamond
