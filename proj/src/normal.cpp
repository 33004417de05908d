#include "fptlab/normal.hpp"

#include <boost/math/special_functions/erf.hpp>

namespace fptlab {

double normal_quantile(double p)
{
    // Phi^{-1}(p) = -sqrt(2) erfc^{-1}(2p); erfc_inv keeps full relative
    // precision for p near 0, where 1 - 2p would cancel.
    return -std::numbers::sqrt2 * boost::math::erfc_inv(2.0 * p);
}

} // namespace fptlab
