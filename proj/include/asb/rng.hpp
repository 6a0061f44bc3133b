#pragma once

#include <cstdint>
#include <string_view>

namespace asb {

// Counter-based SplitMix64 stream. The draw sequence is a pure function of
// the seed, so identically seeded streams replay bit-for-bit on any platform
// (std::normal_distribution and friends do not promise that).
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : state_(seed) {}

    // Independent substream for one sensor, keyed by a fixed label so adding
    // a sensor never shifts another sensor's sequence.
    static RandomStream derive(std::uint64_t master_seed, std::string_view label);

    std::uint64_t next_u64();

    // Uniform in [0, 1).
    double next_uniform();
    // Uniform in [lo, hi).
    double next_uniform(double lo, double hi);
    // Box-Muller, one value per call (two uniforms consumed).
    double next_gaussian(double mean, double sigma);

private:
    std::uint64_t state_;
};

} // namespace asb
