#include "asb/rng.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace asb;

TEST_CASE("identical seeds replay bit-for-bit")
{
    RandomStream a(42), b(42);
    for (int i = 0; i < 1000; ++i)
        CHECK(a.next_u64() == b.next_u64());

    RandomStream c(42), d(43);
    int same = 0;
    for (int i = 0; i < 100; ++i)
        same += c.next_u64() == d.next_u64();
    CHECK(same == 0);
}

TEST_CASE("derived substreams are independent of each other")
{
    RandomStream depth1 = RandomStream::derive(7, "depth");
    RandomStream depth2 = RandomStream::derive(7, "depth");
    RandomStream compass = RandomStream::derive(7, "compass");

    CHECK(depth1.next_u64() == depth2.next_u64());
    RandomStream depth3 = RandomStream::derive(7, "depth");
    CHECK(depth3.next_u64() != compass.next_u64());
}

TEST_CASE("uniform draws stay in range and look flat")
{
    RandomStream rng(123);
    double sum = 0.0;
    for (int i = 0; i < 20'000; ++i) {
        const double u = rng.next_uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        sum += u;
    }
    CHECK(sum / 20'000 == doctest::Approx(0.5).epsilon(0.02));

    for (int i = 0; i < 1000; ++i) {
        const double v = rng.next_uniform(-0.3, 0.3);
        CHECK(v >= -0.3);
        CHECK(v < 0.3);
    }
}

TEST_CASE("gaussian draws have the requested moments")
{
    RandomStream rng(321);
    const int n = 50'000;
    double sum = 0.0, sq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double g = rng.next_gaussian(10.0, 2.0);
        sum += g;
        sq += g * g;
    }
    const double mean = sum / n;
    const double var = sq / n - mean * mean;
    CHECK(mean == doctest::Approx(10.0).epsilon(0.01));
    CHECK(std::sqrt(var) == doctest::Approx(2.0).epsilon(0.02));
}
