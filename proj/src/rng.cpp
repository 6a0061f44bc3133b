#include "asb/rng.hpp"

#include <cmath>
#include <numbers>

namespace asb {

RandomStream RandomStream::derive(std::uint64_t master_seed, std::string_view label)
{
    // FNV-1a over the label, folded into the master seed.
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : label) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return RandomStream(master_seed ^ h);
}

std::uint64_t RandomStream::next_u64()
{
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double RandomStream::next_uniform()
{
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RandomStream::next_uniform(double lo, double hi)
{
    return lo + (hi - lo) * next_uniform();
}

double RandomStream::next_gaussian(double mean, double sigma)
{
    // u1 in (0, 1] keeps the log finite.
    const double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    const double u2 = next_uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    return mean + sigma * r * std::cos(2.0 * std::numbers::pi * u2);
}

} // namespace asb
