#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace hotcold {

/// Deterministic RNG used everywhere randomness is needed. Splitmix64 core,
/// hand-rolled transforms, so the byte stream does not depend on the
/// standard library implementation.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n), n > 0.
    std::uint64_t uniform_index(std::uint64_t n) { return next_u64() % n; }

    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi_inclusive) {
        return lo + static_cast<std::int64_t>(
                        uniform_index(static_cast<std::uint64_t>(hi_inclusive - lo + 1)));
    }

    /// Standard normal via Box-Muller, one spare cached.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        double u2 = uniform();
        if (u1 < 1e-300) u1 = 1e-300;
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    /// Poisson sample; Knuth product for small rates, normal approximation
    /// above 30 (deterministic, adequate for synthetic view counts).
    std::int64_t poisson(double lambda) {
        if (lambda <= 0.0) return 0;
        if (lambda < 30.0) {
            const double limit = std::exp(-lambda);
            double prod = 1.0;
            std::int64_t k = -1;
            do {
                ++k;
                prod *= uniform();
            } while (prod > limit);
            return k;
        }
        const double v = lambda + std::sqrt(lambda) * normal();
        return v < 0.0 ? 0 : static_cast<std::int64_t>(std::llround(v));
    }

    /// In-place Fisher-Yates shuffle.
    template <typename Vec>
    void shuffle(Vec& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(uniform_index(i));
            using std::swap;
            swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// FNV-1a over a byte string; used for text hashing and config digests.
inline std::uint64_t fnv1a(const void* data, std::size_t n,
                           std::uint64_t h = 0xcbf29ce484222325ull) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

/// Derives an independent sub-stream seed from a base seed and a tag.
inline std::uint64_t derive_seed(std::uint64_t seed, const char* tag,
                                 std::uint64_t index = 0) {
    std::uint64_t h = fnv1a(&seed, sizeof(seed));
    std::size_t len = 0;
    while (tag[len] != '\0') ++len;
    h = fnv1a(tag, len, h);
    h = fnv1a(&index, sizeof(index), h);
    return h;
}

} // namespace hotcold
