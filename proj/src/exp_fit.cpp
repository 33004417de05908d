#include "fptlab/exp_fit.hpp"

#include "fptlab/error.hpp"

#include <cmath>
#include <iomanip>
#include <limits>

namespace fptlab {

exp_fit fit_exponential(std::span<const double> edges, std::span<const double> density,
                        double period)
{
    if (!(period > 0.0)) throw domain_error("fit_exponential: period must be positive");
    const std::size_t n = density.size();
    if (n < 3 || edges.size() != n + 1)
        throw insufficient_support_error("fit_exponential: too few bins");
    auto center = [&](std::size_t i) { return 0.5 * (edges[i] + edges[i + 1]); };

    std::size_t start = n;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double c = center(i);
        if (c <= period) continue;
        if (start == n) start = i;  // fallback: first bin past Q
        if (c >= 2.0 * period) break;
        if (density[i] > 0.0 && density[i] >= density[i - 1] && density[i] >= density[i + 1]) {
            start = i;
            break;
        }
    }
    if (start == n) throw insufficient_support_error("fit_exponential: no bins past one period");

    exp_fit fit;
    fit.period = period;
    fit.t_a = edges[start];
    const double support = edges[n] - fit.t_a;
    const auto periods = static_cast<std::size_t>(std::floor(support / period + 1e-9));
    if (periods < 3)
        throw insufficient_support_error("fit_exponential: need three periods past the window start");
    fit.t_b = fit.t_a + static_cast<double>(periods) * period;

    const double slack = 1e-9 * period;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t m = 0;
    std::vector<double> window_density;
    for (std::size_t i = start; i < n && edges[i + 1] <= fit.t_b + slack; ++i) {
        fit.t.push_back(center(i));
        window_density.push_back(density[i]);
        if (density[i] > 0.0) {
            const double x = center(i);
            const double y = std::log(density[i]);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
            ++m;
        }
    }
    if (m < 3) throw insufficient_support_error("fit_exponential: fewer than 3 positive bins");
    const double mean_x = sx / m;
    const double mean_y = sy / m;
    const double slope = (sxy - m * mean_x * mean_y) / (sxx - m * mean_x * mean_x);
    if (!(slope < 0.0)) throw numerical_error("fit_exponential: density is not decaying");
    fit.lambda_hat = -slope;
    fit.log_intercept = mean_y - slope * mean_x;
    fit.n_fitted = m;

    double ss = 0.0;
    fit.z.resize(fit.t.size());
    for (std::size_t i = 0; i < fit.t.size(); ++i) {
        fit.z[i] = window_density[i] * std::exp(fit.lambda_hat * fit.t[i]);
        if (window_density[i] > 0.0) {
            const double r = std::log(window_density[i]) - (fit.log_intercept + slope * fit.t[i]);
            ss += r * r;
        }
    }
    fit.rms_residual = std::sqrt(ss / m);
    return fit;
}

exp_fit fit_exponential(const fpt_density_estimate& est, double period)
{
    return fit_exponential(est.bin_edges, est.density, period);
}

periodicity_report periodicity_check(const exp_fit& fit, double period)
{
    periodicity_report report;
    const std::size_t n = fit.z.size();
    if (n < 2) {
        report.correlation = std::numeric_limits<double>::quiet_NaN();
        return report;
    }
    const double spacing = fit.t[1] - fit.t[0];
    report.lag = static_cast<std::size_t>(std::llround(period / spacing));
    if (report.lag == 0 || n < 2 * report.lag) {
        report.correlation = std::numeric_limits<double>::quiet_NaN();
        return report;
    }
    double mean = 0.0;
    for (double v : fit.z) mean += v;
    mean /= static_cast<double>(n);
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double a = fit.z[i] - mean;
        num += a * (fit.z[(i + report.lag) % n] - mean);
        den += a * a;
    }
    report.correlation = den > 0.0 ? num / den : std::numeric_limits<double>::quiet_NaN();
    report.pass = report.correlation >= periodicity_threshold;
    return report;
}

void write_fit_report(std::ostream& os, const exp_fit& fit, const periodicity_report& periodicity)
{
    os << std::setprecision(10);
    os << "lambda_hat=" << fit.lambda_hat << '\n';
    os << "window=" << fit.t_a << ',' << fit.t_b << '\n';
    os << "rms_residual=" << fit.rms_residual << '\n';
    os << "periodicity_corr=" << periodicity.correlation << '\n';
    os << "periodicity_pass=" << (periodicity.pass ? "true" : "false") << '\n';
}

} // namespace fptlab
