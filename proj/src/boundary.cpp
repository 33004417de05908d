#include "fptlab/boundary.hpp"

#include "fptlab/error.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace fptlab {

boundary boundary::constant(double s0)
{
    if (!std::isfinite(s0)) throw domain_error("constant boundary: S0 must be finite");
    return boundary{constant_boundary{s0}};
}

boundary boundary::periodic(double s0, double amplitude, double period)
{
    if (!std::isfinite(s0) || !(amplitude >= 0.0) || !std::isfinite(amplitude) || !(period > 0.0))
        throw domain_error("periodic boundary: need finite S0, A >= 0, Q > 0");
    return boundary{periodic_boundary{s0, amplitude, period}};
}

boundary boundary::daniels_ou(double d, double beta)
{
    if (!(d > 0.0) || !(beta > 0.0))
        throw domain_error("daniels-ou boundary: need d > 0 and beta > 0");
    return boundary{daniels_ou_boundary{d, beta}};
}

boundary boundary::polynomial(std::vector<double> coeffs)
{
    if (coeffs.empty()) throw domain_error("polynomial boundary: no coefficients");
    for (double c : coeffs)
        if (!std::isfinite(c)) throw domain_error("polynomial boundary: non-finite coefficient");
    return boundary{polynomial_boundary{std::move(coeffs)}};
}

boundary_value daniels_brownian_curve(double d, double u) noexcept
{
    // Below this u the log term is exp(-4d^2/u)-negligible and S_W is linear.
    if (u < 1e-12) {
        const double slope = std::numbers::ln2 / (2.0 * d);
        return {d + u * slope, slope};
    }
    const double a = 4.0 * d * d / u;
    const double e = std::exp(-a);
    const double r = std::sqrt(1.0 + 8.0 * e);
    // ln((1 + r)/4) written as log1p to stay accurate when r -> 3 (large u).
    const double log_term = std::log1p(2.0 * std::expm1(-a) / (r + 3.0));
    const double s = d - u / (2.0 * d) * log_term;
    const double de_du = e * a / u;
    const double dr_du = 4.0 * de_du / r;
    const double dlog_du = dr_du / (1.0 + r);
    const double ds = -log_term / (2.0 * d) - u / (2.0 * d) * dlog_du;
    return {s, ds};
}

namespace {

struct evaluator {
    double t;

    boundary_value operator()(const constant_boundary& b) const noexcept { return {b.s0, 0.0}; }

    boundary_value operator()(const periodic_boundary& b) const noexcept
    {
        const double w = 2.0 * std::numbers::pi / b.period;
        return {b.s0 + b.amplitude * std::sin(w * t), b.amplitude * w * std::cos(w * t)};
    }

    boundary_value operator()(const daniels_ou_boundary& b) const noexcept
    {
        const double u = std::expm1(2.0 * b.beta * t);
        const auto w = daniels_brownian_curve(b.d, u);
        const double decay = std::exp(-b.beta * t);
        const double s = decay * w.s;
        // du/dt = 2 beta (u + 1)
        const double ds = -b.beta * s + decay * w.ds * 2.0 * b.beta * (u + 1.0);
        return {s, ds};
    }

    boundary_value operator()(const polynomial_boundary& b) const noexcept
    {
        double s = 0.0;
        double ds = 0.0;
        for (auto it = b.coeffs.rbegin(); it != b.coeffs.rend(); ++it) {
            ds = ds * t + s;
            s = s * t + *it;
        }
        return {s, ds};
    }
};

} // namespace

boundary_value boundary::eval(double t) const noexcept
{
    return std::visit(evaluator{t}, params_);
}

std::string boundary::name() const
{
    std::ostringstream os;
    os.precision(17);
    std::visit(
        [&os](const auto& b) {
            using T = std::decay_t<decltype(b)>;
            if constexpr (std::is_same_v<T, constant_boundary>) {
                os << "constant(s0=" << b.s0 << ")";
            } else if constexpr (std::is_same_v<T, periodic_boundary>) {
                os << "periodic(s0=" << b.s0 << ",amplitude=" << b.amplitude
                   << ",period=" << b.period << ")";
            } else if constexpr (std::is_same_v<T, daniels_ou_boundary>) {
                os << "daniels-ou(d=" << b.d << ",beta=" << b.beta << ")";
            } else {
                os << "polynomial(";
                for (std::size_t i = 0; i < b.coeffs.size(); ++i)
                    os << (i ? "," : "") << b.coeffs[i];
                os << ")";
            }
        },
        params_);
    return os.str();
}

} // namespace fptlab
