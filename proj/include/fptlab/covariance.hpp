#pragma once

#include <string>

namespace fptlab {

enum class covariance_family { exp_cosine, damped_oscillatory };

/// Unit-variance stationary correlation function gamma(t).
///
///   exp_cosine:          e^{-beta|t|} cos(alpha t)
///   damped_oscillatory:  e^{-beta|t|} [cos(alpha t) + sin(alpha |t|)]
///
/// The damped-oscillatory family is mean-square differentiable only when
/// alpha == beta; for alpha > beta it exceeds 1 near the origin and is
/// rejected. exp_cosine with tiny alpha is the Gauss-Markov (OU) case.
class covariance_model {
public:
    static covariance_model exp_cosine(double alpha, double beta);
    static covariance_model damped_oscillatory(double alpha, double beta);

    covariance_family family() const noexcept { return family_; }
    double alpha() const noexcept { return alpha_; }
    double beta() const noexcept { return beta_; }
    bool ms_differentiable() const noexcept { return ms_differentiable_; }

    /// gamma(|t|).
    double operator()(double t) const noexcept;

    /// Rational spectral density Gamma(omega), normalized so that
    /// gamma(t) = (1/2pi) int Gamma(omega) e^{i omega t} d omega.
    /// Only available for exp_cosine.
    double spectral_density(double omega) const;

    /// Local quadratic-variation rate lim E[(X(t+h)-X(t))^2]/h = -2 gamma'(0+).
    /// Zero for mean-square differentiable models.
    double local_diffusion() const noexcept;

    /// Markov (OU) case: exp_cosine with alpha numerically zero.
    bool is_markov(double alpha_tolerance = 1e-6) const noexcept;

    std::string name() const;

private:
    covariance_model(covariance_family family, double alpha, double beta);

    covariance_family family_;
    double alpha_;
    double beta_;
    bool ms_differentiable_;
};

} // namespace fptlab
