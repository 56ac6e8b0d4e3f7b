#include "pangular/rng.hpp"

#include <cmath>

namespace pangular {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 step applied to seed advanced by index.
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double Rng::log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
}

Vec sample_nonzero_vec(Rng& rng, int dim) {
    for (;;) {
        std::vector<double> coords(static_cast<std::size_t>(dim));
        double sq = 0.0;
        for (auto& c : coords) {
            c = rng.uniform(-1.0, 1.0);
            sq += c * c;
        }
        if (sq >= 1e-6) return Vec(std::move(coords));
    }
}

std::pair<Vec, Vec> sample_pair(Rng& rng, int dim) {
    Vec x = sample_nonzero_vec(rng, dim);
    Vec y = sample_nonzero_vec(rng, dim);
    const double scale = rng.log_uniform(0.1, 10.0);
    return {std::move(x), scale * y};
}

}  // namespace pangular
