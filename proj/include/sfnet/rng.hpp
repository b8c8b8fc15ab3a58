#pragma once

#include <cstdint>

namespace sfnet {

// SplitMix64 (Steele, Lea & Flood, 2014). 64-bit state, one multiply-xor
// chain per output. Chosen over std::mt19937_64 because every derived
// quantity (including shuffles, see uniform_below) is specified here
// bit-for-bit, so runs reproduce across standard libraries and platforms.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform double on the open interval (0,1): 53 random bits, offset by
    // half an ulp so neither endpoint is attainable.
    double next_open01() {
        return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
    }

    std::uint64_t operator()() { return next(); }
    static constexpr std::uint64_t min() { return 0; }
    static constexpr std::uint64_t max() { return ~0ULL; }

private:
    std::uint64_t state_;
};

// SplitMix64 output finalizer, used standalone to hash seed material.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Unbiased integer in [0, bound) by rejection on the top of the 64-bit range.
inline std::uint64_t uniform_below(SplitMix64& rng, std::uint64_t bound) {
    const std::uint64_t limit = ~0ULL - ~0ULL % bound;
    std::uint64_t x;
    do {
        x = rng.next();
    } while (x >= limit);
    return x % bound;
}

// Stream for replica r at size n under a master seed. Pure function of its
// arguments, so replicas can run in any order or in parallel.
inline SplitMix64 replica_stream(std::uint64_t master_seed, std::uint64_t n,
                                 std::uint64_t replica) {
    std::uint64_t s = mix64(master_seed ^ 0x8BADF00D5EEDULL);
    s = mix64(s ^ (n * 0xD6E8FEB86659FD93ULL));
    s = mix64(s ^ (replica * 0xA3B195354A39B70DULL));
    return SplitMix64(s);
}

} // namespace sfnet
