#include "fptlab/hazard.hpp"

#include "fptlab/error.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <iomanip>
#include <numbers>

namespace fptlab {
namespace {

/// Continued fraction K(x) with sqrt(pi) x erfcx(x) = x / (x + K(x)), x > 0.
double erfc_fraction_tail(double x)
{
    double tail = 0.0;
    for (int n = 80; n >= 1; --n) tail = (0.5 * n) / (x + tail);
    return tail;
}

constexpr double fraction_cutover = 2.0;

} // namespace

void validate(const hazard_params& p)
{
    if (!(p.period > 0.0)) throw domain_error("hazard: period Q must be positive");
    if (!(p.alpha > 0.0) || !(p.beta > 0.0)) throw domain_error("hazard: alpha, beta must be positive");
    if (!(p.amplitude >= 0.0) || !std::isfinite(p.s0)) throw domain_error("hazard: bad S0 or A");
}

double hazard_bracket(double rho_dot, double c)
{
    const double x = rho_dot / std::sqrt(2.0 * c);
    if (x <= fraction_cutover)
        return std::exp(-x * x) - std::sqrt(std::numbers::pi) * x * std::erfc(x);
    const double k = erfc_fraction_tail(x);
    return std::exp(-x * x) * k / (x + k);
}

double log_hazard_bracket(double rho_dot, double c)
{
    const double x = rho_dot / std::sqrt(2.0 * c);
    if (x <= fraction_cutover) return std::log(hazard_bracket(rho_dot, c));
    const double k = erfc_fraction_tail(x);
    return -x * x + std::log(k / (x + k));
}

double hazard_tilde(const hazard_params& p, double t)
{
    validate(p);
    const double c = p.alpha * p.alpha + p.beta * p.beta;
    const double w = 2.0 * std::numbers::pi / p.period;
    const double s = p.s0 + p.amplitude * std::sin(w * t);
    const double rho_dot = p.amplitude * w * std::cos(w * t);
    return std::sqrt(c) / (2.0 * std::numbers::pi) * std::exp(-0.5 * s * s)
           * hazard_bracket(rho_dot, c);
}

double mean_hazard(const hazard_params& p)
{
    validate(p);
    using boost::math::quadrature::gauss_kronrod;
    const double integral = gauss_kronrod<double, 61>::integrate(
        [&p](double t) { return hazard_tilde(p, t); }, 0.0, p.period, 15, 1e-14);
    return integral / p.period;
}

hazard_curve hazard_on(const hazard_params& p, std::span<const double> times)
{
    validate(p);
    hazard_curve curve{p, {times.begin(), times.end()}, {}, {}};
    curve.h.reserve(times.size());
    for (double t : times) curve.h.push_back(hazard_tilde(p, t));
    if (!p.differentiable())
        curve.warnings.push_back("alpha != beta: the process is not mean-square differentiable "
                                 "and the hazard formula is outside its derivation");
    return curve;
}

std::vector<double> asymptotic_density(const hazard_params& p, std::span<const double> times)
{
    validate(p);
    constexpr int refine = 10;
    std::vector<double> out(times.size());
    double cumulative = 0.0;
    double prev_t = 0.0;
    double prev_h = hazard_tilde(p, 0.0);
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double t = times[i];
        if (t < prev_t) throw domain_error("asymptotic_density: times must be ascending and >= 0");
        const double step = (t - prev_t) / refine;
        for (int r = 1; r <= refine; ++r) {
            const double tr = r == refine ? t : prev_t + r * step;
            const double hr = hazard_tilde(p, tr);
            cumulative += 0.5 * step * (prev_h + hr);
            prev_h = hr;
        }
        prev_t = t;
        out[i] = prev_h * std::exp(-cumulative);
    }
    return out;
}

void write_curve_csv(std::ostream& os, std::span<const double> t, std::span<const double> v,
                     const char* value_name)
{
    os << "t," << value_name << '\n' << std::setprecision(17);
    for (std::size_t i = 0; i < t.size(); ++i) os << t[i] << ',' << v[i] << '\n';
}

} // namespace fptlab
