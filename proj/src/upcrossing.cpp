#include "fptlab/upcrossing.hpp"

#include "fptlab/error.hpp"
#include "fptlab/normal.hpp"

#include <string>

namespace fptlab {

double truncated_normal_upper(double upper, philox_stream& rng)
{
    const double mass = normal_cdf(upper);
    if (!(mass >= min_initial_mass))
        throw underflow_error("truncated normal: P(X < " + std::to_string(upper)
                              + ") is below 1e-12; initial set is practically empty");
    if (mass >= rejection_threshold) {
        for (;;) {
            const double x = rng.normal();
            if (x < upper) return x;
        }
    }
    const double x = normal_quantile(rng.uniform() * mass);
    return x < upper ? x : std::nextafter(upper, -INFINITY);
}

double upcrossing_initial_sample(const upcrossing_spec& spec, philox_stream& rng)
{
    if (!(spec.epsilon > 0.0)) throw domain_error("upcrossing: epsilon must be positive");
    return truncated_normal_upper(spec.upper(), rng);
}

} // namespace fptlab
