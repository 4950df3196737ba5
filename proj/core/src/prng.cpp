#include "egoprune/prng.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "egoprune/error.hpp"

namespace egoprune {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

uint64_t derive_seed(uint64_t master, uint64_t a, uint64_t b) {
    uint64_t h = splitmix64(master ^ 0xa0761d6478bd642full);
    h = splitmix64(h ^ a);
    h = splitmix64(h ^ b);
    return h;
}

Prng::Prng(uint64_t seed) {
    // Expand the seed with splitmix64 as recommended for xoshiro seeding.
    uint64_t x = seed;
    for (auto& s : s_) {
        x = splitmix64(x);
        s = x;
    }
    // xoshiro must not start from the all-zero state.
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) {
        s_[0] = 0x9e3779b97f4a7c15ull;
    }
}

uint64_t Prng::next_u64() {
    const uint64_t result = std::rotl(s_[0] + s_[3], 23) + s_[0];
    const uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = std::rotl(s_[3], 45);
    return result;
}

double Prng::next_f64() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

uint64_t Prng::next_below(uint64_t n) {
    if (n == 0) {
        fail(Errc::invalid_argument, "next_below: n must be positive");
    }
    // Modulo bias is < n / 2^64, far below anything observable here.
    return next_u64() % n;
}

double Prng::next_gaussian() {
    if (has_gauss_spare_) {
        has_gauss_spare_ = false;
        return gauss_spare_;
    }
    double u1 = next_f64();
    while (u1 <= 0.0) {
        u1 = next_f64();
    }
    const double u2 = next_f64();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    gauss_spare_ = r * std::sin(theta);
    has_gauss_spare_ = true;
    return r * std::cos(theta);
}

std::vector<int32_t> Prng::choose_k(int32_t n, int32_t k) {
    if (n < 0 || k < 0 || k > n) {
        fail(Errc::invalid_argument,
             "choose_k: need 0 <= k <= n, got k=" + std::to_string(k) + " n=" + std::to_string(n));
    }
    std::vector<int32_t> pool(n);
    for (int32_t i = 0; i < n; ++i) {
        pool[i] = i;
    }
    for (int32_t i = 0; i < k; ++i) {
        const auto j = i + static_cast<int32_t>(next_below(static_cast<uint64_t>(n - i)));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return pool;
}

}  // namespace egoprune
