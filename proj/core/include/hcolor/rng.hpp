#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <string_view>

namespace hcolor {

/// Deterministic random stream. The engine is std::mt19937_64, whose output
/// sequence is fixed by the standard, and the bounded/real draws below are
/// implemented here rather than through <random> distributions so that
/// trajectories are bit-identical across standard libraries.
class Rng {
public:
    static constexpr std::string_view algorithm = "mt19937_64";

    explicit Rng(std::uint64_t seed = 0) : engine_(seed), seed_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }

    std::uint64_t next() { return engine_(); }

    /// Uniform on {0, ..., bound-1}; unbiased by rejection. bound must be > 0.
    std::uint64_t uniform_below(std::uint64_t bound) {
        // Largest multiple of bound that fits: draws at or above it are rejected.
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max()
                                  - std::numeric_limits<std::uint64_t>::max() % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform_real() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
    std::uint64_t seed_;
};

/// SplitMix64 finalizer, used to derive independent per-replica seeds.
constexpr std::uint64_t mix_seed(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) noexcept {
    return mix_seed(mix_seed(base) ^ mix_seed(stream + 0x632be59bd9b4e019ULL));
}

} // namespace hcolor
