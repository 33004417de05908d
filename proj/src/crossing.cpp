#include "fptlab/crossing.hpp"

#include "fptlab/error.hpp"
#include "fptlab/kernels.hpp"
#include "fptlab/philox.hpp"

#include <cmath>
#include <string>

namespace fptlab {

crossing_options default_crossing_options(double local_diffusion, std::uint64_t seed)
{
    if (local_diffusion > 0.0) return {crossing_rule::bridge_corrected, local_diffusion, seed};
    return {crossing_rule::grid_interpolated, 0.0, seed};
}

std::vector<double> boundary_on_grid(const boundary& b, const path_grid& grid)
{
    std::vector<double> s(grid.n_steps);
    for (std::size_t k = 0; k < grid.n_steps; ++k) s[k] = b(grid.time(k));
    return s;
}

std::optional<double> first_crossing(std::span<const double> path, std::span<const double> s,
                                     const path_grid& grid, std::size_t path_index,
                                     const crossing_options& options)
{
    if (!(path[0] < s[0]))
        throw start_above_boundary_error("path " + std::to_string(path_index)
                                             + " starts at or above the boundary",
                                         path_index);
    const std::size_t n = path.size();
    const std::size_t k = kernels::first_exceedance(path, s, 1);

    if (options.rule == crossing_rule::bridge_corrected && options.local_diffusion > 0.0) {
        const double scale = 2.0 / (options.local_diffusion * grid.dt);
        const philox_stream rng(options.seed, path_index, rng_purpose::bridge);
        // A uniform in (0,1) never falls below ~5.5e-17 = e^{-37.4}.
        constexpr double max_exponent = 37.5;
        double gap_prev = s[0] - path[0];
        for (std::size_t j = 1; j < k; ++j) {
            const double gap = s[j] - path[j];
            const double exponent = scale * gap_prev * gap;
            if (exponent < max_exponent) {
                const auto u = rng.uniform_pair_at(j / 2)[j % 2];
                if (u < std::exp(-exponent))
                    return grid.time(j - 1) + grid.dt * gap_prev / (gap_prev + gap);
            }
            gap_prev = gap;
        }
    }

    if (k == n) return std::nullopt;
    const double below = path[k - 1] - s[k - 1];
    const double above = path[k] - s[k];
    return grid.time(k - 1) + grid.dt * (-below) / (above - below);
}

std::vector<std::optional<double>> detect_crossings(const sample_path_batch& batch,
                                                    const boundary& b,
                                                    const crossing_options& options)
{
    const auto s = boundary_on_grid(b, batch.grid);
    std::vector<std::optional<double>> out(batch.n_paths);
    for (std::size_t i = 0; i < batch.n_paths; ++i)
        out[i] = first_crossing(batch.path(i), s, batch.grid, batch.first_path + i, options);
    return out;
}

} // namespace fptlab
