#include "fptlab/covariance.hpp"

#include "fptlab/error.hpp"

#include <cmath>
#include <sstream>

namespace fptlab {

covariance_model::covariance_model(covariance_family family, double alpha, double beta)
    : family_(family), alpha_(alpha), beta_(beta),
      ms_differentiable_(family == covariance_family::damped_oscillatory && alpha == beta)
{
    if (!(alpha > 0.0) || !(beta > 0.0) || !std::isfinite(alpha) || !std::isfinite(beta))
        throw domain_error("covariance: alpha and beta must be positive and finite");
    if (family == covariance_family::damped_oscillatory && alpha > beta)
        throw domain_error("covariance: damped-oscillatory needs alpha <= beta "
                           "(otherwise gamma(t) > 1 near t = 0)");
}

covariance_model covariance_model::exp_cosine(double alpha, double beta)
{
    return {covariance_family::exp_cosine, alpha, beta};
}

covariance_model covariance_model::damped_oscillatory(double alpha, double beta)
{
    return {covariance_family::damped_oscillatory, alpha, beta};
}

double covariance_model::operator()(double t) const noexcept
{
    const double a = std::abs(t);
    const double decay = std::exp(-beta_ * a);
    if (family_ == covariance_family::exp_cosine) return decay * std::cos(alpha_ * a);
    return decay * (std::cos(alpha_ * a) + std::sin(alpha_ * a));
}

double covariance_model::spectral_density(double omega) const
{
    if (family_ != covariance_family::exp_cosine)
        throw unsupported_family_error(
            "spectral_density: only the exp-cosine family has a known rational spectrum");
    const double a2 = alpha_ * alpha_;
    const double b2 = beta_ * beta_;
    const double w2 = omega * omega;
    const double num = 2.0 * beta_ * (w2 + a2 + b2);
    const double den = w2 * w2 + 2.0 * w2 * (b2 - a2) + (a2 + b2) * (a2 + b2);
    return num / den;
}

double covariance_model::local_diffusion() const noexcept
{
    // gamma'(0+) = -beta for exp_cosine, alpha - beta for damped_oscillatory.
    if (family_ == covariance_family::exp_cosine) return 2.0 * beta_;
    return 2.0 * (beta_ - alpha_);
}

bool covariance_model::is_markov(double alpha_tolerance) const noexcept
{
    return family_ == covariance_family::exp_cosine && alpha_ <= alpha_tolerance;
}

std::string covariance_model::name() const
{
    std::ostringstream os;
    os.precision(17);
    os << (family_ == covariance_family::exp_cosine ? "exp-cosine" : "damped-oscillatory")
       << "(alpha=" << alpha_ << ",beta=" << beta_ << ")";
    return os.str();
}

} // namespace fptlab
