#include "fptlab/daniels.hpp"
#include "fptlab/density.hpp"
#include "fptlab/error.hpp"
#include "fptlab/fpt_mc.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>

using namespace fptlab;

TEST_SUITE("density")
{
    TEST_CASE("mass accounting with censoring")
    {
        const path_grid grid{0.01, 1001};
        std::vector<std::optional<double>> c{0.01, 0.26, 0.27, std::nullopt, 9.999, std::nullopt, 5.0};
        const auto est = estimate_density(c, grid, 0.25, fpt_kind::conditioned);
        CHECK(est.n_bins() == 40);
        CHECK(est.n_paths == 7);
        CHECK(est.n_censored == 2);
        std::uint64_t total = 0;
        for (auto k : est.counts) total += k;
        CHECK(total + est.n_censored == est.n_paths);
        CHECK(est.mass() == doctest::Approx(5.0 / 7.0).epsilon(1e-14));
        CHECK(est.counts[1] == 2);
        CHECK(est.counts[39] == 1);
        CHECK(est.counts[20] == 1);
    }

    TEST_CASE("single crossing gives density 1/width")
    {
        const std::vector<std::optional<double>> c{0.12};
        const auto est = estimate_density(c, {0.01, 101}, 0.05, fpt_kind::conditioned);
        CHECK(est.density[2] == doctest::Approx(1.0 / 0.05));
        CHECK(est.center(2) == doctest::Approx(0.125));
        CHECK(est.stderr_at(2) == 0.0);
    }

    TEST_CASE("invalid inputs")
    {
        const std::vector<std::optional<double>> none;
        CHECK_THROWS_AS(estimate_density(none, {0.01, 101}, 0.05, fpt_kind::conditioned), empty_input_error);
        const std::vector<std::optional<double>> one{0.5};
        CHECK_THROWS_AS(estimate_density(one, {0.01, 101}, 0.001, fpt_kind::conditioned), domain_error);
    }

    TEST_CASE("csv layout")
    {
        const std::vector<std::optional<double>> c{0.12, 0.3};
        std::ostringstream os;
        write_csv(os, estimate_density(c, {0.1, 5}, 0.2, fpt_kind::conditioned));
        std::istringstream in(os.str());
        std::string header, row;
        std::getline(in, header);
        std::getline(in, row);
        CHECK(header == "t_left,t_right,density,stderr");
        double left, right, dens;
        char comma;
        std::istringstream fields(row);
        fields >> left >> comma >> right >> comma >> dens;
        CHECK(left == 0.0);
        CHECK(right == doctest::Approx(0.2));
        CHECK(dens == doctest::Approx(2.5));
    }
}

TEST_SUITE("density_slow")
{
    TEST_CASE("Markov example at a million paths stays within L1 0.02 of the closed form")
    {
        const double d = 0.25, beta = 0.5;
        mc_options o;
        o.n_paths = 1000000;
        o.seed = 2024;
        o.bin_width = 0.05;
        const auto r = estimate_fpt_density(covariance_model::exp_cosine(1e-10, beta),
                                            boundary::daniels_ou(d, beta), path_grid{0.01, 1001}, 0.0, o);
        const auto& est = r.estimate;
        double l1 = 0.0;
        for (std::size_t i = 0; i < est.n_bins(); ++i) {
            auto g = [&](double t) { return closed_form_daniels(d, beta, t); };
            const double avg = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
                                   g, est.bin_edges[i], est.bin_edges[i + 1], 10, 1e-12)
                               / est.bin_width(i);
            l1 += std::abs(est.density[i] - avg) * est.bin_width(i);
        }
        MESSAGE("L1 = " << l1);
        CHECK(l1 <= 0.02);
    }
}
