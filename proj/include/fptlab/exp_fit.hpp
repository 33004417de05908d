#pragma once

#include "fptlab/density.hpp"

#include <ostream>
#include <span>
#include <vector>

namespace fptlab {

/// Log-linear fit g(t) ~ Z(t) e^{-lambda t} over whole boundary periods.
struct exp_fit {
    double lambda_hat = 0.0;
    double log_intercept = 0.0;
    double t_a = 0.0;
    double t_b = 0.0;
    double period = 0.0;
    std::vector<double> t;  // bin centres in [t_a, t_b)
    std::vector<double> z;  // density * e^{lambda_hat t}
    double rms_residual = 0.0;
    std::size_t n_fitted = 0;
};

/// Least squares of ln(density) on t over bins with positive density, in a
/// window that starts at the first local maximum after t = Q (or at the first
/// bin after Q if the histogram has none there) and spans the largest whole
/// number of periods. Throws insufficient_support_error if fewer than three
/// periods fit.
exp_fit fit_exponential(std::span<const double> bin_edges, std::span<const double> density,
                        double period);
exp_fit fit_exponential(const fpt_density_estimate& est, double period);

struct periodicity_report {
    double correlation = 0.0;
    std::size_t lag = 0;
    bool pass = false;
};

inline constexpr double periodicity_threshold = 0.5;

/// Circular autocorrelation of Z at a lag of one period; passes at >= 0.5.
/// Windows shorter than two periods report NaN and fail.
periodicity_report periodicity_check(const exp_fit& fit, double period);

/// Plain-text key=value report.
void write_fit_report(std::ostream& os, const exp_fit& fit, const periodicity_report& periodicity);

} // namespace fptlab
