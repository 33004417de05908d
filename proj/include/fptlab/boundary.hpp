#pragma once

#include <string>
#include <variant>
#include <vector>

namespace fptlab {

struct constant_boundary {
    double s0;
};

/// S(t) = S0 + A sin(2 pi t / Q); rho(t) = A sin(2 pi t / Q) is its periodic part.
struct periodic_boundary {
    double s0;
    double amplitude;
    double period;
};

/// Daniels-type curve for the zero-start OU process with drift rate beta:
/// the image of the Brownian image-method boundary under X(t) = e^{-beta t} W(e^{2 beta t} - 1).
struct daniels_ou_boundary {
    double d;
    double beta;
};

/// Coefficients lowest degree first: S(t) = sum c_k t^k.
struct polynomial_boundary {
    std::vector<double> coeffs;
};

struct boundary_value {
    double s;
    double ds;
};

class boundary {
public:
    using params = std::variant<constant_boundary, periodic_boundary, daniels_ou_boundary,
                                polynomial_boundary>;

    static boundary constant(double s0);
    static boundary periodic(double s0, double amplitude, double period);
    static boundary daniels_ou(double d, double beta);
    static boundary polynomial(std::vector<double> coeffs);

    const params& parameters() const noexcept { return params_; }

    /// Value and first derivative at t >= 0.
    boundary_value eval(double t) const noexcept;
    double operator()(double t) const noexcept { return eval(t).s; }

    std::string name() const;

private:
    explicit boundary(params p) : params_(std::move(p)) {}
    params params_;
};

/// Brownian-scale Daniels curve S_W(u) = d - (u/2d) ln[(1 + sqrt(1 + 8 e^{-4d^2/u}))/4]
/// and its derivative in u. At u = 0 returns the limit (d, ln 2 / 2d).
boundary_value daniels_brownian_curve(double d, double u) noexcept;

} // namespace fptlab
