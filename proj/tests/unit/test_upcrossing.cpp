#include "fptlab/error.hpp"
#include "fptlab/upcrossing.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <cmath>
#include <initializer_list>
#include <numbers>

using namespace fptlab;

namespace {

std::vector<double> draws(double upper, std::size_t n, std::uint64_t seed)
{
    philox_stream rng(seed, 0, rng_purpose::initial_state);
    std::vector<double> x(n);
    for (auto& v : x) v = truncated_normal_upper(upper, rng);
    return x;
}

} // namespace

TEST_SUITE("upcrossing")
{
    TEST_CASE("upper bound zero gives the negative half-normal")
    {
        const std::size_t n = 1000000;
        const auto x = draws(0.0, n, 1);
        const double mean = -std::sqrt(2.0 / std::numbers::pi);
        const double se = std::sqrt((1.0 - 2.0 / std::numbers::pi) / n);
        CHECK(std::abs(testing::mean(x) - mean) < 3.0 * se);
        CHECK(*std::max_element(x.begin(), x.end()) < 0.0);
    }

    TEST_CASE("a far upper bound leaves N(0,1)")
    {
        const std::size_t n = 200000;
        const auto x = draws(8.0, n, 2);
        CHECK(std::abs(testing::mean(x)) < 3.0 / std::sqrt(double(n)));
        CHECK(std::abs(testing::variance(x) - 1.0) < 3.0 * std::sqrt(2.0 / n));
    }

    TEST_CASE("deep lower tail uses the inverse cdf and has the inverse-Mills mean")
    {
        const double a = -4.0;
        const std::size_t n = 200000;
        const auto x = draws(a, n, 3);
        CHECK(*std::max_element(x.begin(), x.end()) < a);
        const double phi = std::exp(-0.5 * a * a) / std::sqrt(2.0 * std::numbers::pi);
        const double Phi = 0.5 * std::erfc(-a / std::sqrt(2.0));
        const double mean = -phi / Phi;
        const double var = 1.0 + a * (-phi / Phi) - mean * mean;
        CHECK(std::abs(testing::mean(x) - mean) < 3.0 * std::sqrt(var / n));
    }

    TEST_CASE("empty initial set")
    {
        philox_stream rng(1, 0, rng_purpose::initial_state);
        CHECK_THROWS_AS(truncated_normal_upper(-30.0, rng), underflow_error);
        const upcrossing_spec spec{0.1, boundary::constant(-29.9)};
        CHECK(spec.upper() == doctest::Approx(-30.0));
        CHECK_THROWS_AS(upcrossing_initial_sample(spec, rng), underflow_error);
    }

    TEST_CASE("initial values stay below S(0) - epsilon")
    {
        const upcrossing_spec spec{0.2, boundary::periodic(2.0, 0.1, 3.0)};
        philox_stream rng(4, 0, rng_purpose::initial_state);
        for (int i = 0; i < 10000; ++i) REQUIRE(upcrossing_initial_sample(spec, rng) < 1.8);
    }
}
