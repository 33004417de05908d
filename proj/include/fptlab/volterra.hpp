#pragma once

#include "fptlab/boundary.hpp"
#include "fptlab/gauss_markov.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace fptlab {

/// Everything the kernel needs about the process and boundary at one time.
struct kernel_node {
    double t;
    double m, dm;
    double h1, h2, dh1, dh2;
    double s, ds;
};

kernel_node make_node(const gauss_markov_spec& spec, const boundary& b, double t);

/// Psi(t | y, tau) for tau < t, from precomputed nodes at t and tau.
/// Throws domain_error if D = h1(t)h2(tau) - h2(t)h1(tau) <= 0.
double kernel_psi(const kernel_node& at_t, const kernel_node& at_tau, double y);

/// Psi(t | y, tau) = 1/2 f(S(t), t | y, tau) { S'(t) - m'(t)
///     - [S(t) - m(t)] [h1'(t)h2(tau) - h2'(t)h1(tau)] / D
///     + [y - m(tau)] [h1'(t)h2(t) - h2'(t)h1(t)] / D },
/// f the Gaussian transition density. Returns 0 on the diagonal tau == t.
double kernel_psi(const gauss_markov_spec& spec, const boundary& b, double t, double y, double tau);

struct volterra_solution {
    std::vector<double> t;  // t_1 .. t_N
    std::vector<double> g;
    double h = 0.0;
    double x0 = 0.0;
    std::string process;
    std::string boundary;

    /// Trapezoid integral of g over [0, t_N] with g(0) = 0.
    double mass() const noexcept;
};

inline constexpr double volterra_divergence_limit = 1e3;

/// Marches g_k = -2 Psi(t_k | x0, 0) + 2h sum_{j=1}^{k-1} g_j Psi(t_k | S(t_j), t_j)
/// on t_k = k h. Requires x0 < S(0) and h <= t_max / 100. Throws
/// instability_error if |g_k| exceeds 1e3.
volterra_solution solve_volterra(const gauss_markov_spec& spec, const boundary& b, double x0,
                                 double h, double t_max);

/// Columns t,g with one header line.
void write_csv(std::ostream& os, const volterra_solution& sol);

} // namespace fptlab
