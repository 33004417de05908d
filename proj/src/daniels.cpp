#include "fptlab/daniels.hpp"

#include "fptlab/boundary.hpp"
#include "fptlab/error.hpp"
#include "fptlab/normal.hpp"

#include <cmath>

namespace fptlab {

double daniels_image_density(double d, double x, double u)
{
    if (!(d > 0.0) || !(u > 0.0)) throw domain_error("daniels image density: need d, u > 0");
    return normal_pdf(x, 0.0, u) - 0.5 * normal_pdf(x - 2.0 * d, 0.0, u)
           - 0.5 * normal_pdf(x - 4.0 * d, 0.0, u);
}

double daniels_brownian_fpt_density(double d, double u)
{
    if (!(d > 0.0) || !(u > 0.0)) throw domain_error("daniels fpt density: need d, u > 0");
    const double s = daniels_brownian_curve(d, u).s;
    const double flux = s * normal_pdf(s, 0.0, u)
                        - 0.5 * (s - 2.0 * d) * normal_pdf(s - 2.0 * d, 0.0, u)
                        - 0.5 * (s - 4.0 * d) * normal_pdf(s - 4.0 * d, 0.0, u);
    return 0.5 * flux / u;
}

double closed_form_daniels(double d, double beta, double t)
{
    if (!(d > 0.0) || !(beta > 0.0) || !(t > 0.0))
        throw domain_error("closed_form_daniels: need d, beta, t > 0");
    const double u = std::expm1(2.0 * beta * t);
    return 2.0 * beta * (u + 1.0) * daniels_brownian_fpt_density(d, u);
}

} // namespace fptlab
