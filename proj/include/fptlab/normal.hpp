#pragma once

#include <cmath>
#include <numbers>

namespace fptlab {

inline double normal_pdf(double x) noexcept
{
    return std::exp(-0.5 * x * x) * (0.5 * std::numbers::inv_sqrtpi * std::numbers::sqrt2);
}

/// Gaussian density with the given mean and variance.
inline double normal_pdf(double x, double mean, double variance) noexcept
{
    const double z = x - mean;
    return std::exp(-0.5 * z * z / variance) / std::sqrt(2.0 * std::numbers::pi * variance);
}

inline double normal_cdf(double x) noexcept
{
    return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

/// Inverse of normal_cdf on (0, 1); accurate deep in both tails.
double normal_quantile(double p);

} // namespace fptlab
