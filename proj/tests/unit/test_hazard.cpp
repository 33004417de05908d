#include "fptlab/error.hpp"
#include "fptlab/hazard.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <doctest.h>

#include <cmath>
#include <initializer_list>
#include <numbers>

using namespace fptlab;
using std::numbers::pi;

namespace {

double rice_rate(double s0, double alpha, double beta)
{
    return std::sqrt(alpha * alpha + beta * beta) / (2 * pi) * std::exp(-s0 * s0 / 2);
}

double hazard_reference(const hazard_params& p, double t)
{
    const double c = p.alpha * p.alpha + p.beta * p.beta;
    const double s = p.s0 + p.amplitude * std::sin(2 * pi * t / p.period);
    const double rd = 2 * pi * p.amplitude / p.period * std::cos(2 * pi * t / p.period);
    const double bracket = std::exp(-rd * rd / (2 * c)) - std::sqrt(pi / (2 * c)) * rd * std::erfc(rd / std::sqrt(2 * c));
    return std::sqrt(c) / (2 * pi) * std::exp(-s * s / 2) * bracket;
}

const hazard_params periodic_case{2.0, 0.1, 3.0, 1.0, 1.0};

} // namespace

TEST_SUITE("hazard")
{
    TEST_CASE("constant boundary gives the Rice rate")
    {
        const hazard_params p{2.0, 0.0, 3.0, 1.0, 1.0};
        for (double t : {0.0, 0.7, 10.0}) CHECK(hazard_tilde(p, t) == doctest::Approx(rice_rate(2.0, 1.0, 1.0)).epsilon(1e-12));
        CHECK(hazard_tilde(p, 0.0) == doctest::Approx(std::sqrt(2.0) / (2 * pi) * std::exp(-2.0)).epsilon(1e-12));
        CHECK(hazard_tilde(p, 0.0) == doctest::Approx(0.0304611409).epsilon(1e-9));
        // c = alpha^2 + beta^2 = -gamma''(0) for the damped oscillatory family at alpha = beta
        const double a = 1.3, e = 1e-5;
        auto g = [&](double t) { return std::exp(-a * std::abs(t)) * (std::cos(a * t) + std::sin(a * std::abs(t))); };
        CHECK(-(g(e) - 2 * g(0) + g(-e)) / (e * e) == doctest::Approx(2 * a * a).epsilon(1e-4));
    }

    TEST_CASE("periodic boundary matches the formula")
    {
        for (double t : {0.0, 0.75, 1.5, 2.2, 100.1}) CHECK(hazard_tilde(periodic_case, t) == doctest::Approx(hazard_reference(periodic_case, t)).epsilon(1e-13));
    }

    TEST_CASE("bracket is positive and decreasing")
    {
        double prev = std::numeric_limits<double>::infinity();
        for (double r = -1000.0; r <= 1000.0; r += 0.25) {
            const double v = hazard_bracket(r, 2.0);
            if (r < 20.0) REQUIRE(v > 0.0);
            REQUIRE(v >= 0.0);
            REQUIRE(std::isfinite(log_hazard_bracket(r, 2.0)));
            REQUIRE(v <= prev);
            prev = v;
        }
        CHECK(hazard_bracket(0.0, 2.0) == 1.0);
        CHECK(hazard_bracket(1.0, 2.0) > hazard_bracket(10.0, 2.0));
        CHECK(hazard_bracket(10.0, 2.0) > 0.0);
        CHECK(log_hazard_bracket(1000.0, 2.0) < log_hazard_bracket(100.0, 2.0));
    }

    TEST_CASE("mean hazard over a period")
    {
        auto f = [](double t) { return hazard_reference(periodic_case, t); };
        const double ref = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, 3.0, 10, 1e-14) / 3.0;
        CHECK(mean_hazard(periodic_case) == doctest::Approx(ref).epsilon(1e-10));
    }

    TEST_CASE("asymptotic density with a constant hazard is exponential")
    {
        const hazard_params p{2.0, 0.0, 3.0, 1.0, 1.0};
        const double r = rice_rate(2.0, 1.0, 1.0);
        std::vector<double> t;
        for (int k = 0; k <= 1500; ++k) t.push_back(0.1 * k);
        const auto g = asymptotic_density(p, t);
        for (std::size_t i = 0; i < t.size(); ++i) REQUIRE(std::abs(g[i] - r * std::exp(-r * t[i])) < 1e-8);
    }

    TEST_CASE("asymptotic density has unit mass")
    {
        const double lambda = mean_hazard(periodic_case);
        std::vector<double> t;
        for (double x = 0.0; x <= 40.0 / lambda; x += 0.01) t.push_back(x);
        const auto g = asymptotic_density(periodic_case, t);
        double mass = 0.0;
        for (std::size_t i = 1; i < t.size(); ++i) mass += 0.5 * (t[i] - t[i - 1]) * (g[i] + g[i - 1]);
        CHECK(std::abs(mass - 1.0) < 1e-4);
    }

    TEST_CASE("validation and warnings")
    {
        CHECK_THROWS_AS(validate(hazard_params{2.0, 0.1, 0.0, 1.0, 1.0}), domain_error);
        CHECK_THROWS_AS(validate(hazard_params{2.0, 0.1, 3.0, 0.0, 1.0}), domain_error);
        CHECK_THROWS_AS(validate(hazard_params{2.0, 0.1, 3.0, 1.0, -1.0}), domain_error);
        const std::vector<double> t{0.0, 1.0};
        CHECK(hazard_on(periodic_case, t).warnings.empty());
        CHECK_FALSE(hazard_on(hazard_params{2.0, 0.1, 3.0, 0.5, 1.0}, t).warnings.empty());
    }
}
