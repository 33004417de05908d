#include "fptlab/density.hpp"

#include "fptlab/error.hpp"

#include <cmath>
#include <iomanip>

namespace fptlab {

double fpt_density_estimate::stderr_at(std::size_t i) const noexcept
{
    const double n = static_cast<double>(n_paths);
    const double p = static_cast<double>(counts[i]) / n;
    return std::sqrt(p * (1.0 - p) / n) / bin_width(i);
}

double fpt_density_estimate::mass() const noexcept
{
    double m = 0.0;
    for (std::size_t i = 0; i < n_bins(); ++i) m += density[i] * bin_width(i);
    return m;
}

fpt_density_estimate estimate_density(std::span<const std::optional<double>> crossings,
                                      const path_grid& grid, double bin_width, fpt_kind kind)
{
    if (crossings.empty()) throw empty_input_error("estimate_density: no paths");
    if (!(bin_width >= grid.dt))
        throw domain_error("estimate_density: bin width must be at least dt");

    const double t_max = grid.t_max();
    const auto n_bins =
        std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(t_max / bin_width - 1e-9)));
    fpt_density_estimate est;
    est.kind = kind;
    est.n_paths = crossings.size();
    est.bin_edges.resize(n_bins + 1);
    for (std::size_t i = 0; i <= n_bins; ++i) est.bin_edges[i] = static_cast<double>(i) * bin_width;
    est.counts.assign(n_bins, 0);
    for (const auto& c : crossings) {
        if (!c) {
            ++est.n_censored;
            continue;
        }
        auto bin = static_cast<std::size_t>(std::max(*c, 0.0) / bin_width);
        if (bin >= n_bins) bin = n_bins - 1;
        ++est.counts[bin];
    }
    est.density.resize(n_bins);
    const double n = static_cast<double>(est.n_paths);
    for (std::size_t i = 0; i < n_bins; ++i)
        est.density[i] = static_cast<double>(est.counts[i]) / (n * bin_width);
    return est;
}

void write_csv(std::ostream& os, const fpt_density_estimate& est)
{
    os << "t_left,t_right,density,stderr\n";
    os << std::setprecision(17);
    for (std::size_t i = 0; i < est.n_bins(); ++i)
        os << est.bin_edges[i] << ',' << est.bin_edges[i + 1] << ',' << est.density[i] << ','
           << est.stderr_at(i) << '\n';
}

} // namespace fptlab
