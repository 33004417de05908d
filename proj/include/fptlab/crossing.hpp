#pragma once

#include "fptlab/boundary.hpp"
#include "fptlab/path_batch.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace fptlab {

enum class crossing_rule {
    /// First grid point above S, refined by linear interpolation of X - S.
    grid_interpolated,
    /// As above, plus a Brownian-bridge test on every sub-threshold interval:
    /// the path is declared to have crossed inside (t_{k-1}, t_k) with
    /// probability exp(-2 a b / (sigma^2 dt)), a, b the two gaps to S.
    bridge_corrected,
};

struct crossing_options {
    crossing_rule rule = crossing_rule::grid_interpolated;
    /// sigma^2 of the local Brownian behaviour (covariance_model::local_diffusion()).
    double local_diffusion = 0.0;
    std::uint64_t seed = 0;
};

/// Picks bridge_corrected for rough paths and grid_interpolated otherwise.
crossing_options default_crossing_options(double local_diffusion, std::uint64_t seed);

std::vector<double> boundary_on_grid(const boundary& b, const path_grid& grid);

/// Crossing time of one path, or nullopt if it stays below S up to t_max.
/// Throws start_above_boundary_error if path[0] >= s[0].
std::optional<double> first_crossing(std::span<const double> path, std::span<const double> s,
                                     const path_grid& grid, std::size_t path_index,
                                     const crossing_options& options = {});

std::vector<std::optional<double>> detect_crossings(const sample_path_batch& batch,
                                                    const boundary& b,
                                                    const crossing_options& options = {});

} // namespace fptlab
