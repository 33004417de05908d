#include "fptlab/philox.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <set>

using namespace fptlab;

TEST_SUITE("rng")
{
    TEST_CASE("philox4x32-10 known-answer vectors")
    {
        CHECK(philox4x32_10({0, 0, 0, 0}, {0, 0})
              == philox_counter{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});
        CHECK(philox4x32_10({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                            {0xffffffffu, 0xffffffffu})
              == philox_counter{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu});
        CHECK(philox4x32_10({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
                            {0xa4093822u, 0x299f31d0u})
              == philox_counter{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u});
    }

    TEST_CASE("uniforms lie strictly inside (0, 1)")
    {
        CHECK(to_open_unit(0, 0) > 0.0);
        CHECK(to_open_unit(0xffffffffu, 0xffffffffu) < 1.0);
        philox_stream s(3, 0, rng_purpose::test);
        for (int i = 0; i < 10000; ++i) {
            const double u = s.uniform();
            REQUIRE(u > 0.0);
            REQUIRE(u < 1.0);
        }
    }

    TEST_CASE("streams differ by seed, index and purpose")
    {
        std::set<double> firsts;
        for (std::uint64_t seed : {1u, 2u})
            for (std::uint64_t stream : {0u, 1u, 1000000u})
                for (auto purpose : {rng_purpose::path_noise, rng_purpose::bridge})
                    firsts.insert(philox_stream(seed, stream, purpose).uniform_pair_at(0)[0]);
        CHECK(firsts.size() == 12);
    }

    TEST_CASE("sequential draws follow the random-access blocks")
    {
        philox_stream a(9, 4, rng_purpose::initial_state);
        const philox_stream b(9, 4, rng_purpose::initial_state);
        for (std::uint64_t k = 0; k < 5; ++k) {
            const auto z = b.normal_pair_at(k);
            CHECK(a.normal() == z[0]);
            CHECK(a.normal() == z[1]);
        }
    }

    TEST_CASE("fill_normal matches normal_pair_at, including an odd tail")
    {
        const philox_stream s(77, 12, rng_purpose::path_noise);
        std::vector<double> out(1001);
        s.fill_normal(out);
        for (std::size_t k = 0; k < 500; ++k) {
            const auto z = s.normal_pair_at(k);
            REQUIRE(out[2 * k] == z[0]);
            REQUIRE(out[2 * k + 1] == z[1]);
        }
        CHECK(out[1000] == s.normal_pair_at(500)[0]);
    }

    TEST_CASE("normals have unit variance and Gaussian tails")
    {
        const philox_stream s(5, 0, rng_purpose::test);
        std::vector<double> z(1 << 20);
        s.fill_normal(z);
        const double n = static_cast<double>(z.size());
        CHECK(std::abs(testing::mean(z)) < 4.0 / std::sqrt(n));
        CHECK(std::abs(testing::variance(z) - 1.0) < 4.0 * std::sqrt(2.0 / n));
        // P(|Z| > 3) = 0.0026997960632601866
        const double tail = static_cast<double>(std::count_if(z.begin(), z.end(), [](double x) { return std::abs(x) > 3.0; })) / n;
        const double p = std::erfc(3.0 / std::sqrt(2.0));
        CHECK(std::abs(tail - p) < 4.0 * std::sqrt(p * (1 - p) / n));
    }
}
