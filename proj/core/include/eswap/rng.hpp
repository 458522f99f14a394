#pragma once

#include <cstdint>
#include <random>

namespace eswap {

/// Deterministic RNG stream addressed by (master seed, sample index,
/// substream). Results are independent of worker count because each
/// sample derives its own generator from the address alone.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t sample_index = 0,
              std::uint64_t substream = 0)
        : engine_(mix(mix(mix(0x9E3779B97F4A7C15ULL ^ seed) + sample_index) +
                      substream)) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1) with 53 random bits.
    double next_uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Standard real normal via Box-Muller (implementation pinned here so
    /// streams are reproducible across standard libraries).
    double next_normal();

private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace eswap
