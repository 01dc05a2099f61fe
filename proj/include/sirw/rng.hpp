#pragma once

#include <cstdint>
#include <random>

namespace sirw {

using Rng = std::mt19937_64;

// splitmix64 finalizer (Steele, Lea, Flood 2014). Used both to expand a
// single seed into engine state and to derive independent stream seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Deterministic per-replica stream seed: mixes (master, experiment, replica)
// so that replicas can run in any order on any number of workers.
inline std::uint64_t stream_seed(std::uint64_t master, std::uint64_t experiment_id,
                                 std::uint64_t replica) {
    std::uint64_t h = splitmix64(master ^ 0x6A09E667F3BCC909ULL);
    h = splitmix64(h ^ splitmix64(experiment_id));
    h = splitmix64(h ^ splitmix64(replica ^ 0x3C6EF372FE94F82BULL));
    return h;
}

inline Rng make_rng(std::uint64_t seed) {
    return Rng(splitmix64(seed));
}

inline double u01(Rng& g) {
    return std::uniform_real_distribution<double>{0.0, 1.0}(g);
}

inline double normal(Rng& g, double mean = 0.0, double sd = 1.0) {
    return std::normal_distribution<double>{mean, sd}(g);
}

// chi-square with real dof >= 0 (gamma(dof/2, 2); dof == 0 is the zero mass)
inline double chi_square(Rng& g, double dof) {
    if (dof <= 0.0) return 0.0;
    return std::gamma_distribution<double>{dof / 2.0, 2.0}(g);
}

inline std::uint64_t poisson(Rng& g, double mean) {
    if (mean <= 0.0) return 0;
    return static_cast<std::uint64_t>(std::poisson_distribution<long long>{mean}(g));
}

} // namespace sirw
