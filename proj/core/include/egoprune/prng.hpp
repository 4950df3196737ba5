#pragma once

#include <cstdint>
#include <vector>

namespace egoprune {

/// Deterministic 64-bit generator: xoshiro256++ seeded through splitmix64.
/// The algorithm is fixed so that identical seeds give identical streams on
/// every platform; all randomized tests regenerate expectations from seeds.
class Prng {
public:
    explicit Prng(uint64_t seed);

    uint64_t next_u64();

    /// Uniform in [0, 1) with 53 bits of mantissa.
    double next_f64();

    /// Uniform integer in [0, n). n must be positive.
    uint64_t next_below(uint64_t n);

    /// Standard normal deviate (Box-Muller).
    double next_gaussian();

    /// k distinct indices from {0..n-1}, partial Fisher-Yates order.
    std::vector<int32_t> choose_k(int32_t n, int32_t k);

private:
    uint64_t s_[4];
    double gauss_spare_ = 0.0;
    bool has_gauss_spare_ = false;
};

/// splitmix64 finalizer; used for seed derivation and stateless hashing.
uint64_t splitmix64(uint64_t x);

/// Derives an independent per-(a, b) stream seed from a master seed, so that
/// pairwise estimations are reproducible regardless of evaluation order.
uint64_t derive_seed(uint64_t master, uint64_t a, uint64_t b);

}  // namespace egoprune
