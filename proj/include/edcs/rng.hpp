#pragma once

#include <cstdint>

namespace edcs {

// 64-bit mixing function (splitmix64 finalizer). Used both as the Rng step
// and to derive independent child seeds for parallel workers.
inline std::uint64_t hash64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t hash64(std::uint64_t a, std::uint64_t b) {
    return hash64(a ^ (hash64(b) + 0x9e3779b97f4a7c15ull));
}

// Deterministic counter-based generator: identical seed gives an identical
// draw sequence regardless of platform. Single-owner; parallel callers take
// child(i) instead of sharing one instance.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), pos_(0) {}

    std::uint64_t next_u64() { return hash64(seed_ + 0x632be59bd9b4e019ull * ++pos_); }

    // Uniform in [0,1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [0,n). Rejection-free Lemire reduction is overkill here;
    // plain rejection keeps the draw exactly uniform.
    std::uint64_t next_below(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do { x = next_u64(); } while (x >= limit);
        return x % n;
    }

    bool next_bool() { return (next_u64() & 1) != 0; }

    Rng child(std::uint64_t stream_index) const { return Rng(hash64(seed_, stream_index)); }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t position() const { return pos_; }

private:
    std::uint64_t seed_;
    std::uint64_t pos_;
};

} // namespace edcs
