#pragma once

#include "fptlab/boundary.hpp"
#include "fptlab/philox.hpp"

namespace fptlab {

/// epsilon-upcrossing setup: X(0) ~ N(0,1) truncated to (-inf, S(0) - epsilon).
struct upcrossing_spec {
    double epsilon;
    fptlab::boundary boundary;

    double upper() const noexcept { return boundary(0.0) - epsilon; }
};

/// Below this P(X(0) < S(0) - eps) the initial set is treated as empty.
inline constexpr double min_initial_mass = 1e-12;

/// Above this acceptance rate the sampler rejects against N(0,1);
/// below it, inverts the CDF on the truncated range.
inline constexpr double rejection_threshold = 1e-2;

/// One draw from N(0,1) restricted to (-inf, upper). Throws underflow_error
/// when Phi(upper) < min_initial_mass.
double truncated_normal_upper(double upper, philox_stream& rng);

double upcrossing_initial_sample(const upcrossing_spec& spec, philox_stream& rng);

} // namespace fptlab
