#pragma once

#include "fptlab/path_batch.hpp"

#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace fptlab {

/// Periodic boundary S(t) = s0 + A sin(2 pi t / Q) against a damped-oscillatory
/// process with -gamma''(0) = alpha^2 + beta^2.
struct hazard_params {
    double s0;
    double amplitude;
    double period;
    double alpha;
    double beta;

    /// The hazard formula presumes mean-square differentiability (alpha == beta).
    bool differentiable() const noexcept { return alpha == beta; }
};

void validate(const hazard_params& p);

/// exp(-x^2) - sqrt(pi) x erfc(x) with x = rho_dot / sqrt(2c).
/// Positive for every real rho_dot; underflows to 0 for rho_dot >> sqrt(c).
double hazard_bracket(double rho_dot, double c);

/// Natural log of hazard_bracket, finite where the bracket itself underflows.
double log_hazard_bracket(double rho_dot, double c);

/// h~(t) = sqrt(c)/(2 pi) exp(-S(t)^2/2) * bracket(rho'(t)), c = alpha^2 + beta^2.
double hazard_tilde(const hazard_params& p, double t);

/// Time average of h~ over one boundary period.
double mean_hazard(const hazard_params& p);

struct hazard_curve {
    hazard_params params;
    std::vector<double> t;
    std::vector<double> h;
    std::vector<std::string> warnings;
};

hazard_curve hazard_on(const hazard_params& p, std::span<const double> times);

/// g(t) = h~(t) exp(-int_0^t h~), the integral by cumulative trapezoid with
/// ten sub-steps per output interval. `times` ascending, >= 0.
std::vector<double> asymptotic_density(const hazard_params& p, std::span<const double> times);

/// Columns t,<value_name> with one header line.
void write_curve_csv(std::ostream& os, std::span<const double> t, std::span<const double> v,
                     const char* value_name);

} // namespace fptlab
