#include "fptlab/normal.hpp"

#include <doctest.h>

#include <cmath>
#include <initializer_list>
#include <numbers>

using namespace fptlab;

TEST_SUITE("normal")
{
    TEST_CASE("pdf and cdf at reference points")
    {
        CHECK(normal_pdf(0.0) == doctest::Approx(1.0 / std::sqrt(2.0 * std::numbers::pi)).epsilon(1e-15));
        CHECK(normal_pdf(2.0, 1.0, 4.0) == doctest::Approx(std::exp(-0.125) / std::sqrt(8.0 * std::numbers::pi)).epsilon(1e-15));
        CHECK(normal_cdf(0.0) == 0.5);
        // erfc-based oracle
        for (double x : {-38.0, -8.0, -1.5, 0.3, 2.0, 9.0})
            CHECK(normal_cdf(x) == doctest::Approx(0.5 * std::erfc(-x / std::sqrt(2.0))).epsilon(1e-14));
    }

    TEST_CASE("quantile inverts the cdf, deep tails included")
    {
        for (double p : {1e-300, 1e-20, 1e-5, 0.025, 0.5, 0.975, 1 - 1e-12})
            CHECK(normal_cdf(normal_quantile(p)) == doctest::Approx(p).epsilon(1e-10));
        CHECK(normal_quantile(0.975) == doctest::Approx(1.959963984540054).epsilon(1e-14));
    }
}
