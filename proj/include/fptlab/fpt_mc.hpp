#pragma once

#include "fptlab/boundary.hpp"
#include "fptlab/covariance.hpp"
#include "fptlab/crossing.hpp"
#include "fptlab/density.hpp"
#include "fptlab/sampler.hpp"

#include <optional>
#include <vector>

namespace fptlab {

struct mc_options {
    std::size_t n_paths = 100000;
    std::uint64_t seed = 1;
    double bin_width = 0.05;
    unsigned workers = 0;
    sampler_kind sampler = sampler_kind::circulant;
    /// Unset: bridge correction for rough paths, interpolation otherwise.
    std::optional<crossing_rule> rule;
    std::size_t chunk = 64;
};

struct mc_result {
    fpt_density_estimate estimate;
    /// One entry per counted path in index order; +inf when censored.
    std::vector<double> crossing_times;
    /// Paths generated, including rejected ones.
    std::size_t candidates = 0;
};

/// Streams n_paths conditioned paths through crossing detection without
/// holding the whole batch in memory.
mc_result simulate_fpt(const path_sampler& sampler, const boundary& b, const conditioning& cond,
                       const mc_options& options, fpt_kind kind = fpt_kind::conditioned);

/// Conditioned FPT density g~ for paths pinned at X(0) = x0.
mc_result estimate_fpt_density(const covariance_model& model, const boundary& b,
                               const path_grid& grid, double x0, const mc_options& options);

enum class upcrossing_route {
    /// X(0) drawn from the truncated normal, rest of the path by the exact Gaussian update.
    conditional_start,
    /// Unconditioned stationary paths, discarding those with X(0) >= S(0) - eps.
    rejection,
};

/// epsilon-upcrossing density g~_u. Both routes count n_paths accepted
/// paths; with a shared seed, path i of either route is built from the
/// same underlying stationary path.
mc_result estimate_upcrossing_density(const covariance_model& model, const boundary& b,
                                      double epsilon, const path_grid& grid,
                                      const mc_options& options,
                                      upcrossing_route route = upcrossing_route::conditional_start);

} // namespace fptlab
