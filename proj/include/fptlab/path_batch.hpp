#pragma once

#include "fptlab/upcrossing.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

namespace fptlab {

/// Uniform time grid t_k = k dt, k = 0 .. n_steps-1.
struct path_grid {
    double dt;
    std::size_t n_steps;

    double t_max() const noexcept { return dt * static_cast<double>(n_steps - 1); }
    double time(std::size_t k) const noexcept { return dt * static_cast<double>(k); }

    /// Smallest grid with spacing dt whose t_max reaches `horizon`.
    static path_grid covering(double dt, double horizon);
};

void validate(const path_grid& grid);

struct unconditional {};

struct fixed_start {
    double x0;
};

struct truncated_start {
    upcrossing_spec spec;
};

using conditioning = std::variant<unconditional, fixed_start, truncated_start>;

/// Row-major block of paths with global indices [first_path, first_path + n_paths).
struct sample_path_batch {
    path_grid grid;
    std::uint64_t seed = 0;
    fptlab::conditioning conditioning = unconditional{};
    std::size_t first_path = 0;
    std::size_t n_paths = 0;
    std::vector<double> values;

    std::span<const double> path(std::size_t i) const noexcept
    {
        return {values.data() + i * grid.n_steps, grid.n_steps};
    }
    std::span<double> path(std::size_t i) noexcept
    {
        return {values.data() + i * grid.n_steps, grid.n_steps};
    }
};

} // namespace fptlab
