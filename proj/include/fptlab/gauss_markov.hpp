#pragma once

#include <functional>
#include <string>

namespace fptlab {

/// Gauss-Markov process through its mean and covariance factors,
/// c(tau, t) = h1(tau) h2(t) for tau <= t.
struct gauss_markov_spec {
    using fn = std::function<double(double)>;

    std::string name;
    fn m;
    fn dm;
    fn h1;
    fn h2;
    fn dh1;
    fn dh2;

    /// Conditional variance of X(t) given X(tau), tau < t.
    double conditional_variance(double t, double tau) const;
};

/// Stationary OU with correlation e^{-beta|t|}, conditioned on X(0) = 0:
/// h1(s) = e^{beta s} - e^{-beta s}, h2(t) = e^{-beta t}.
gauss_markov_spec ou_zero_start(double beta);

/// Standard Wiener process: h1(s) = s, h2 = 1.
gauss_markov_spec wiener();

/// Checks h2 > 0, h1/h2 strictly increasing and V(t|tau) > 0 on a uniform
/// grid over (t_min, t_max]. Throws domain_error on the first violation.
void validate(const gauss_markov_spec& spec, double t_min, double t_max, int points = 256);

} // namespace fptlab
