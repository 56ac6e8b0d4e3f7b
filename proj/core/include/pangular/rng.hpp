#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "pangular/vec.hpp"

namespace pangular {

// splitmix64 of (seed, index): derives independent per-index streams from one
// master seed, so work split across threads reproduces the serial result.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

// Deterministic uniform sampling on top of std::mt19937_64. The standard pins
// the mt19937_64 output sequence; the double conversions below bypass
// std::uniform_real_distribution, whose mapping is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // [0, 1) with 53-bit resolution.
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

    // Log-uniform on [lo, hi), lo > 0.
    double log_uniform(double lo, double hi);

private:
    std::mt19937_64 gen_;
};

// Coordinates uniform in [-1, 1], rejecting vectors of euclidean length
// below 1e-3 so callers never see a (near-)zero sample.
Vec sample_nonzero_vec(Rng& rng, int dim);

// Generic nonzero pair for sweeps: y is additionally stretched by a
// log-uniform factor in [0.1, 10] so the norm ratio ||y||/||x|| varies.
std::pair<Vec, Vec> sample_pair(Rng& rng, int dim);

}  // namespace pangular
