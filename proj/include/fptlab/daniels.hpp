#pragma once

namespace fptlab {

/// Two-image transition density of a Brownian motion started at 0 and
/// killed on the Daniels curve S_W(u):
///   p(x, u) = phi_u(x) - 1/2 phi_u(x - 2d) - 1/2 phi_u(x - 4d).
/// The weights make p vanish identically on S_W.
double daniels_image_density(double d, double x, double u);

/// Brownian first-passage density through S_W: -1/2 dp/dx at x = S_W(u).
double daniels_brownian_fpt_density(double d, double u);

/// OU first-passage density through the daniels_ou boundary, obtained from
/// the Brownian one by X(t) = e^{-beta t} W(e^{2 beta t} - 1):
///   g(t) = 2 beta e^{2 beta t} g_W(e^{2 beta t} - 1).
/// Throws domain_error unless d, beta, t > 0.
double closed_form_daniels(double d, double beta, double t);

} // namespace fptlab
