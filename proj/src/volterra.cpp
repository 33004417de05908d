#include "fptlab/volterra.hpp"

#include "fptlab/error.hpp"
#include "fptlab/kernels.hpp"
#include "fptlab/normal.hpp"

#include <cmath>
#include <iomanip>
#include <string>

namespace fptlab {

kernel_node make_node(const gauss_markov_spec& spec, const boundary& b, double t)
{
    const auto sv = b.eval(t);
    return {t, spec.m(t), spec.dm(t), spec.h1(t), spec.h2(t), spec.dh1(t), spec.dh2(t), sv.s, sv.ds};
}

double kernel_psi(const kernel_node& at, const kernel_node& from, double y)
{
    const double det = at.h1 * from.h2 - at.h2 * from.h1;
    if (!(det > 0.0))
        throw domain_error("kernel_psi: h1(t)h2(tau) - h2(t)h1(tau) <= 0 at t="
                           + std::to_string(at.t) + ", tau=" + std::to_string(from.t));
    const double ratio = at.h2 / from.h2;
    const double mean = at.m + ratio * (y - from.m);
    const double variance = ratio * det;
    const double f = normal_pdf(at.s, mean, variance);
    const double bracket = at.ds - at.dm
                           - (at.s - at.m) * (at.dh1 * from.h2 - at.dh2 * from.h1) / det
                           + (y - from.m) * (at.dh1 * at.h2 - at.dh2 * at.h1) / det;
    return 0.5 * f * bracket;
}

double kernel_psi(const gauss_markov_spec& spec, const boundary& b, double t, double y, double tau)
{
    if (tau == t) return 0.0;
    if (!(tau < t)) throw domain_error("kernel_psi: need tau < t");
    return kernel_psi(make_node(spec, b, t), make_node(spec, b, tau), y);
}

double volterra_solution::mass() const noexcept
{
    double sum = 0.0;
    double prev = 0.0;
    for (double v : g) {
        sum += 0.5 * h * (prev + v);
        prev = v;
    }
    return sum;
}

volterra_solution solve_volterra(const gauss_markov_spec& spec, const boundary& b, double x0,
                                 double h, double t_max)
{
    if (!(h > 0.0) || !(t_max > 0.0)) throw domain_error("solve_volterra: need h, t_max > 0");
    if (h > 0.01 * t_max * (1.0 + 1e-12))
        throw domain_error("solve_volterra: step must be at most t_max / 100");
    if (!(x0 < b(0.0))) throw domain_error("solve_volterra: x0 must lie below S(0)");

    const auto n = static_cast<std::size_t>(std::llround(t_max / h));
    std::vector<kernel_node> nodes(n + 1);
    for (std::size_t k = 0; k <= n; ++k) nodes[k] = make_node(spec, b, static_cast<double>(k) * h);

    volterra_solution sol;
    sol.h = h;
    sol.x0 = x0;
    sol.process = spec.name;
    sol.boundary = b.name();
    sol.t.resize(n);
    sol.g.resize(n);

    // g_all[0] = g(0) = 0 since x0 < S(0); row[j] = Psi(t_k | S(t_j), t_j).
    std::vector<double> g_all(n + 1, 0.0);
    std::vector<double> row(n + 1, 0.0);
    const auto& kern = kernels::active();
    for (std::size_t k = 1; k <= n; ++k) {
        const auto& at = nodes[k];
        for (std::size_t j = 1; j < k; ++j) row[j] = kernel_psi(at, nodes[j], nodes[j].s);
        const double integral = k > 1 ? kern.dot(g_all.data() + 1, row.data() + 1, k - 1) : 0.0;
        const double gk = -2.0 * kernel_psi(at, nodes[0], x0) + 2.0 * h * integral;
        if (!(std::abs(gk) <= volterra_divergence_limit))
            throw instability_error("solve_volterra: |g| exceeded 1e3 at t=" + std::to_string(at.t)
                                    + "; step too coarse");
        g_all[k] = gk;
        sol.t[k - 1] = at.t;
        sol.g[k - 1] = gk;
    }
    return sol;
}

void write_csv(std::ostream& os, const volterra_solution& sol)
{
    os << "t,g\n" << std::setprecision(17);
    for (std::size_t i = 0; i < sol.t.size(); ++i) os << sol.t[i] << ',' << sol.g[i] << '\n';
}

} // namespace fptlab
