#pragma once

#include "fptlab/covariance.hpp"

namespace fptlab {

/// theta = int_0^inf |gamma(tau)| d tau, by Gauss-Kronrod between the zeros
/// of gamma on [0, T*] dropping a tail bounded by 1e-10; absolute error <= 1e-8.
double correlation_time(const covariance_model& model);

} // namespace fptlab
