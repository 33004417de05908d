#include "fptlab/correlation_time.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <numbers>
#include <vector>

namespace fptlab {

double correlation_time(const covariance_model& model)
{
    using boost::math::quadrature::gauss_kronrod;
    const double beta = model.beta();
    const double alpha = model.alpha();
    // |gamma| <= c e^{-beta t}; choose T* so the tail c e^{-beta T*}/beta < 1e-10.
    const double envelope =
        model.family() == covariance_family::exp_cosine ? 1.0 : std::numbers::sqrt2;
    const double t_star = std::max(std::log(envelope / (beta * 1e-10)), 1.0) / beta;

    // Zeros of gamma: cos(alpha t) = 0, or tan(alpha t) = -1 for the damped family.
    std::vector<double> knots{0.0};
    const double first =
        model.family() == covariance_family::exp_cosine ? 0.5 * std::numbers::pi : 0.75 * std::numbers::pi;
    for (double k = 0;; ++k) {
        const double z = (first + k * std::numbers::pi) / alpha;
        if (!(z < t_star)) break;
        knots.push_back(z);
    }
    knots.push_back(t_star);

    auto f = [&model](double t) { return std::abs(model(t)); };
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i)
        total += gauss_kronrod<double, 61>::integrate(f, knots[i], knots[i + 1], 20, 1e-13);
    return total;  // dropped tail < 1e-10
}

} // namespace fptlab
