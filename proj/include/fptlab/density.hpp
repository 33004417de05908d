#pragma once

#include "fptlab/path_batch.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

namespace fptlab {

enum class fpt_kind { conditioned, upcrossing };

/// Histogram estimate of an FPT density with censoring bookkeeping:
/// sum(counts) + n_censored == n_paths.
struct fpt_density_estimate {
    std::vector<double> bin_edges;
    std::vector<double> density;
    std::vector<std::uint64_t> counts;
    std::size_t n_paths = 0;
    std::size_t n_censored = 0;
    fpt_kind kind = fpt_kind::conditioned;

    std::size_t n_bins() const noexcept { return density.size(); }
    double bin_width(std::size_t i) const noexcept { return bin_edges[i + 1] - bin_edges[i]; }
    double center(std::size_t i) const noexcept { return 0.5 * (bin_edges[i] + bin_edges[i + 1]); }
    /// sqrt(p(1-p)/n) / width with p the bin's empirical probability.
    double stderr_at(std::size_t i) const noexcept;
    /// sum density * width; equals 1 - n_censored / n_paths.
    double mass() const noexcept;
};

/// Bins [0, w), [w, 2w), ... covering [0, grid.t_max()].
fpt_density_estimate estimate_density(std::span<const std::optional<double>> crossings,
                                      const path_grid& grid, double bin_width, fpt_kind kind);

/// Columns t_left,t_right,density,stderr with one header line.
void write_csv(std::ostream& os, const fpt_density_estimate& est);

} // namespace fptlab
