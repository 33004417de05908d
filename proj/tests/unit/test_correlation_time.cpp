#include "fptlab/correlation_time.hpp"
#include "fptlab/covariance.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <doctest.h>

#include <cmath>
#include <initializer_list>
#include <numbers>

using namespace fptlab;
using std::numbers::pi;

namespace {

// int |e^{-bt} cos(at)| over [0, inf) summed analytically between the zeros of cos.
double exp_cosine_theta(double a, double b)
{
    auto F = [&](double t) { return std::exp(-b * t) * (a * std::sin(a * t) - b * std::cos(a * t)) / (a * a + b * b); };
    double sum = 0.0, lo = 0.0;
    for (int k = 0;; ++k) {
        const double hi = (k + 0.5) * pi / a;
        sum += std::abs(F(hi) - F(lo));
        lo = hi;
        if (std::exp(-b * lo) < 1e-18) break;
    }
    return sum;
}

} // namespace

TEST_SUITE("correlation_time")
{
    TEST_CASE("Markov case is 1/beta")
    {
        for (double beta : {0.5, 1.0, 3.0})
            CHECK(std::abs(correlation_time(covariance_model::exp_cosine(1e-10, beta)) - 1.0 / beta) < 1e-6);
    }

    TEST_CASE("oscillating exp-cosine against the piecewise analytic sum")
    {
        for (auto [a, b] : {std::pair{0.5, 0.5}, std::pair{1.0, 1.0}, std::pair{3.0, 0.2}})
            CHECK(std::abs(correlation_time(covariance_model::exp_cosine(a, b)) - exp_cosine_theta(a, b)) < 1e-8);
    }

    TEST_CASE("damped oscillatory: refined quadrature agrees")
    {
        const auto m = covariance_model::damped_oscillatory(1.0, 1.0);
        const double theta = correlation_time(m);
        CHECK(theta > 0.0);
        CHECK(std::isfinite(theta));
        // Gauss-Kronrod between the zeros t = 3pi/4 + k pi, each piece split into ten
        auto f = [&](double t) { return std::abs(m(t)); };
        double ref = 0.0, lo = 0.0;
        for (int k = 0; k < 16; ++k) {
            const double hi = 0.75 * pi + k * pi;
            for (int j = 0; j < 10; ++j)
                ref += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
                    f, lo + (hi - lo) * j / 10, lo + (hi - lo) * (j + 1) / 10, 0);
            lo = hi;
        }
        CHECK(std::abs(theta - ref) < 1e-8);
    }

    TEST_CASE("decreasing in beta")
    {
        for (double alpha : {1e-10, 0.5}) {
            double prev = std::numeric_limits<double>::infinity();
            for (double beta : {0.5, 0.75, 1.0, 2.0, 4.0}) {
                const double theta = correlation_time(covariance_model::exp_cosine(alpha, beta));
                CHECK(theta < prev);
                prev = theta;
            }
        }
    }
}
