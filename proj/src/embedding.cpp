#include "fptlab/embedding.hpp"

#include "fptlab/error.hpp"
#include "fptlab/fft.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace fptlab {

void validate(const path_grid& grid)
{
    if (!(grid.dt > 0.0) || !std::isfinite(grid.dt))
        throw domain_error("path grid: dt must be positive");
    if (grid.n_steps < 2) throw domain_error("path grid: need at least 2 points");
}

path_grid path_grid::covering(double dt, double horizon)
{
    if (!(dt > 0.0) || !(horizon > 0.0)) throw domain_error("path grid: dt and horizon must be > 0");
    const auto intervals = static_cast<std::size_t>(std::ceil(horizon / dt - 1e-9));
    return {dt, std::max<std::size_t>(intervals, 1) + 1};
}

namespace {

std::size_t initial_circulant_size(std::size_t n_steps)
{
    std::size_t m = 2;
    while (m < 2 * (n_steps - 1)) m *= 2;
    return m;
}

std::vector<double> circulant_eigenvalues(const covariance_model& model, double dt, std::size_t m)
{
    std::vector<double> row(m);
    for (std::size_t k = 0; k < m; ++k)
        row[k] = model(static_cast<double>(std::min(k, m - k)) * dt);
    return real_symmetric_spectrum(row);
}

} // namespace

embedding_plan plan_embedding(const covariance_model& model, const path_grid& grid)
{
    validate(grid);
    embedding_plan plan;
    plan.circulant_size = initial_circulant_size(grid.n_steps);
    for (int attempt = 0;; ++attempt) {
        auto lambda = circulant_eigenvalues(model, grid.dt, plan.circulant_size);
        const double max_l = *std::max_element(lambda.begin(), lambda.end());
        const double min_l = *std::min_element(lambda.begin(), lambda.end());
        double total = 0.0;
        double negative = 0.0;
        for (double l : lambda) {
            total += std::abs(l);
            if (l < 0.0) negative -= l;
        }
        const double clipped = total > 0.0 ? negative / total : 0.0;
        const bool acceptable = min_l >= -embedding_negative_tolerance * max_l;
        if (acceptable || attempt == embedding_max_doublings) {
            if (!acceptable && clipped > embedding_max_clipped_mass)
                throw embedding_error("circulant embedding of " + model.name() + " still clips "
                                      + std::to_string(clipped) + " of the spectrum after "
                                      + std::to_string(embedding_max_doublings) + " doublings");
            for (double& l : lambda) l = std::max(l, 0.0);
            plan.eigenvalues = std::move(lambda);
            plan.clipped_mass = clipped;
            plan.min_eigenvalue = min_l;
            plan.doublings = attempt;
            return plan;
        }
        plan.circulant_size *= 2;
    }
}

double implied_covariance(const embedding_plan& plan, std::ptrdiff_t lag)
{
    const auto m = plan.circulant_size;
    double sum = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
        const auto phase = static_cast<double>((static_cast<std::size_t>(std::abs(lag)) * k) % m);
        sum += plan.eigenvalues[k] * std::cos(2.0 * std::numbers::pi * phase / static_cast<double>(m));
    }
    return sum / static_cast<double>(m);
}

} // namespace fptlab
