#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace esymdom {

/// SplitMix64 finalizer; also used to derive substream keys.
[[nodiscard]] inline std::uint64_t mix64(std::uint64_t z)
{
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Deterministic 64-bit generator with explicitly specified output mapping,
/// so seeded corpora and reports are byte-identical across platforms (the
/// standard <random> distributions make no such guarantee). Substreams are
/// keyed by (seed, index); trials drawn from distinct substreams are
/// independent of evaluation order.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform on [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform on (0, 1]; safe under log().
    double uniform_open01()
    {
        return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    double log_uniform(double lo, double hi)
    {
        return std::exp(uniform(std::log(lo), std::log(hi)));
    }

    /// Standard normal via Box-Muller (cosine branch).
    double normal()
    {
        const double u1 = uniform_open01();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    std::uint64_t state_;
};

/// Substream key for trial `index` of a batch seeded with `seed`.
[[nodiscard]] inline std::uint64_t substream_key(std::uint64_t seed,
                                                 std::uint64_t index)
{
    return mix64(mix64(seed) ^ mix64(index * 0xA24BAED4963EE407ULL + 1));
}

[[nodiscard]] inline SplitMix64 substream(std::uint64_t seed, std::uint64_t index)
{
    return SplitMix64(substream_key(seed, index));
}

} // namespace esymdom
