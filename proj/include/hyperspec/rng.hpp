// Counter-based deterministic random numbers for the Monte Carlo oracles.
//
// Every oracle takes an explicit 64-bit seed and draws from its own stream, so
// results are reproducible bit-for-bit regardless of evaluation order and the
// streams can be sharded (seed ^ shard index) without shared state.

#pragma once

#include <cmath>
#include <cstdint>

namespace hyperspec {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : key_(splitmix64(seed ^ 0x6a09e667f3bcc909ULL)) {}

    std::uint64_t next_u64() { return splitmix64(key_ + 0x9e3779b97f4a7c15ULL * ++counter_); }

    // Uniform in [0, 1).
    double u01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [-1, 1).
    double sym() { return 2.0 * u01() - 1.0; }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }

    // Standard normal (Box-Muller; one value per call, no caching so the
    // stream position stays a pure function of the call count).
    double normal() {
        double u1 = u01(), u2 = u01();
        if (u1 <= 0) u1 = 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

// Default seed used by the CLI when neither --seed nor HYPERSPEC_SEED is given.
inline constexpr std::uint64_t kDefaultSeed = 20260823ULL;

} // namespace hyperspec
