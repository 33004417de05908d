#pragma once

#include "fptlab/covariance.hpp"
#include "fptlab/path_batch.hpp"

#include <cstddef>
#include <vector>

namespace fptlab {

/// Eigenvalues of the circulant extension of [gamma(t_i - t_j)].
struct embedding_plan {
    std::size_t circulant_size = 0;
    std::vector<double> eigenvalues;  // clipped, all >= 0
    double clipped_mass = 0.0;        // sum |negative| / sum |lambda|
    double min_eigenvalue = 0.0;      // before clipping
    int doublings = 0;
};

inline constexpr double embedding_negative_tolerance = 1e-8;
inline constexpr double embedding_max_clipped_mass = 1e-6;
inline constexpr int embedding_max_doublings = 6;

/// Builds the circulant first row c_k = gamma(min(k, m-k) dt) with m the
/// smallest power of two >= 2(n_steps - 1), diagonalizes it by FFT, and
/// doubles m until the most negative eigenvalue is above -1e-8 * max
/// (at most 6 doublings). Throws embedding_error if the final attempt still
/// clips more than 1e-6 of the spectral mass.
embedding_plan plan_embedding(const covariance_model& model, const path_grid& grid);

/// Covariance entry (i, j) implied by the plan: (1/m) sum_k lambda_k cos(2 pi k (i-j)/m).
double implied_covariance(const embedding_plan& plan, std::ptrdiff_t lag);

} // namespace fptlab
