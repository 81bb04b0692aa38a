#pragma once

#include <bit>
#include <cstdint>

namespace frank {

// All bitset-valued state in the solver (edge subsets, vertex subsets,
// orientation bit vectors) lives in a single 64-bit word. That caps oriented
// computations at 64 vertices / 64 edges, which covers every target family;
// code that could exceed the cap raises SpaceTooLarge instead of truncating.

inline int popcount64(std::uint64_t x) { return std::popcount(x); }
inline int ctz64(std::uint64_t x) { return std::countr_zero(x); }

inline std::uint64_t bit(int i) { return std::uint64_t{1} << i; }
inline bool has_bit(std::uint64_t mask, int i) { return (mask >> i) & 1u; }

/// Mask with the low `n` bits set; valid for 0 <= n <= 64.
inline std::uint64_t low_bits(int n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

/// Deterministic 64-bit RNG (splitmix64). The standard <random> engines are
/// portable but the distributions are not; this keeps seeded runs
/// byte-identical across platforms.
class rng64 {
public:
    explicit rng64(std::uint64_t seed = 0) : state_(seed + 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform draw from [0, n), n > 0.
    std::uint64_t next_below(std::uint64_t n) {
        // rejection sampling keeps the draw exactly uniform
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t x;
        do { x = next(); } while (x >= limit);
        return x % n;
    }

    double next_unit() { return (next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

} // namespace frank
