#include "fptlab/gauss_markov.hpp"

#include "fptlab/error.hpp"

#include <cmath>
#include <sstream>

namespace fptlab {

double gauss_markov_spec::conditional_variance(double t, double tau) const
{
    const double h2tau = h2(tau);
    return h2(t) * (h1(t) * h2tau - h1(tau) * h2(t)) / h2tau;
}

gauss_markov_spec ou_zero_start(double beta)
{
    if (!(beta > 0.0)) throw domain_error("ou_zero_start: beta must be positive");
    std::ostringstream name;
    name << "ou(beta=" << beta << ")";
    return {
        name.str(),
        [](double) { return 0.0; },
        [](double) { return 0.0; },
        [beta](double s) { return 2.0 * std::sinh(beta * s); },
        [beta](double t) { return std::exp(-beta * t); },
        [beta](double s) { return 2.0 * beta * std::cosh(beta * s); },
        [beta](double t) { return -beta * std::exp(-beta * t); },
    };
}

gauss_markov_spec wiener()
{
    return {
        "wiener",
        [](double) { return 0.0; },
        [](double) { return 0.0; },
        [](double s) { return s; },
        [](double) { return 1.0; },
        [](double) { return 1.0; },
        [](double) { return 0.0; },
    };
}

void validate(const gauss_markov_spec& spec, double t_min, double t_max, int points)
{
    if (!(t_max > t_min) || points < 2) throw domain_error("validate: empty time range");
    const double step = (t_max - t_min) / points;
    double prev_ratio = -INFINITY;
    double prev_t = t_min;
    for (int i = 1; i <= points; ++i) {
        const double t = t_min + i * step;
        const double h2 = spec.h2(t);
        if (!(h2 > 0.0)) throw domain_error(spec.name + ": h2(t) <= 0 at t=" + std::to_string(t));
        const double ratio = spec.h1(t) / h2;
        if (!(ratio > prev_ratio))
            throw domain_error(spec.name + ": h1/h2 not increasing at t=" + std::to_string(t));
        if (i > 1 && !(spec.conditional_variance(t, prev_t) > 0.0))
            throw domain_error(spec.name + ": conditional variance <= 0 at t="
                               + std::to_string(t));
        prev_ratio = ratio;
        prev_t = t;
    }
}

} // namespace fptlab
