#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace kmpp {

/// Deterministic uniform stream. The engine (mt19937_64) and the 53-bit
/// mapping to [0,1) are both fully specified, so a given seed reproduces the
/// same sequence on every platform and compiler. One stream has exactly one
/// owner; concurrent runs use independently seeded streams.
class RandomStream {
public:
    static constexpr std::string_view algorithm_id = "mt19937_64/u53";

    explicit RandomStream(std::uint64_t seed) : engine_(seed), seed_(seed) {}

    /// Next uniform in [0, 1), 53 significant bits.
    double uniform() {
        ++draw_count_;
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform index in [0, n). Consumes one draw.
    std::size_t uniform_index(std::size_t n) {
        const auto idx = static_cast<std::size_t>(uniform() * static_cast<double>(n));
        return idx < n ? idx : n - 1;  // guard the rounding-up edge for large n
    }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t draw_count() const { return draw_count_; }

    RandomStream(const RandomStream&) = delete;
    RandomStream& operator=(const RandomStream&) = delete;
    RandomStream(RandomStream&&) = default;
    RandomStream& operator=(RandomStream&&) = default;

private:
    std::mt19937_64 engine_;
    std::uint64_t seed_;
    std::uint64_t draw_count_ = 0;
};

/// splitmix64 step; the standard mixer for deriving independent seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Cell seed derivation: a pure function of the identifiers, so adding
/// variants or k values to a plan never perturbs other cells' randomness.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t variant_id,
                              std::uint64_t k, std::uint64_t repetition) {
    std::uint64_t s = base;
    s ^= splitmix64(s) + variant_id;
    s ^= splitmix64(s) + k;
    s ^= splitmix64(s) + repetition;
    return splitmix64(s);
}

}  // namespace kmpp
