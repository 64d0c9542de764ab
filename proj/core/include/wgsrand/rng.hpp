#pragma once

#include <cstdint>
#include <cmath>
#include <random>
#include <utility>

namespace wgsrand {

// SplitMix64 finalizer. Used to turn (root seed, stream id) into an engine
// seed so that streams are decorrelated and adding trajectories never
// reshuffles existing ones.
inline constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// One independent random stream per (root seed, stream id) pair.
///
/// Splitting rule: the mt19937_64 engine for stream k of root seed s is
/// seeded with mix64(mix64(s) + k). Uniform and Gaussian draws are mapped
/// from raw 64-bit words by hand so that output is identical across
/// standard library implementations.
class RngStream {
  public:
    RngStream(std::uint64_t root_seed, std::uint64_t stream_id)
        : engine_(mix64(mix64(root_seed) + stream_id)) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1), 53 bits of precision.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool next_bit() { return (next_u64() >> 63) != 0; }

    /// Two independent standard normals (Box-Muller). Always consumes
    /// exactly two uniform draws.
    std::pair<double, double> gaussian_pair() {
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log1p(-u1));  // u1 < 1, so safe
        const double a = 2.0 * M_PI * u2;
        return {r * std::cos(a), r * std::sin(a)};
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace wgsrand
