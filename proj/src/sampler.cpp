#include "fptlab/sampler.hpp"

#include "fptlab/error.hpp"
#include "fptlab/kernels.hpp"
#include "fptlab/parallel.hpp"
#include "fptlab/philox.hpp"

#include <cmath>
#include <complex>

namespace fptlab {

circulant_sampler::circulant_sampler(covariance_model model, path_grid grid, embedding_plan plan)
    : model_(model), grid_(grid), plan_(std::move(plan))
{
    validate(grid_);
    const std::size_t m = plan_.circulant_size;
    if (m < 2 * (grid_.n_steps - 1) || plan_.eigenvalues.size() != m)
        throw domain_error("circulant sampler: plan does not match grid");
    weights_.resize(m);
    for (std::size_t k = 0; k < m; ++k)
        weights_[k] = std::sqrt(plan_.eigenvalues[k] / static_cast<double>(m));
    fft_ = std::make_unique<forward_fft>(m);
}

void circulant_sampler::generate(std::uint64_t seed, std::size_t first, std::size_t count,
                                 std::span<double> out) const
{
    if (count == 0) return;
    const std::size_t m = plan_.circulant_size;
    const std::size_t n = grid_.n_steps;
    auto buf = make_fft_buffer(m);
    auto* z = reinterpret_cast<double*>(buf.get());
    const auto& k = kernels::active();
    const std::size_t end = first + count;
    for (std::size_t pair = first / 2; 2 * pair < end; ++pair) {
        philox_stream rng(seed, pair, rng_purpose::path_noise);
        rng.fill_normal({z, 2 * m});
        k.scale_complex(z, weights_.data(), m);
        fft_->execute(buf.get());
        for (std::size_t half = 0; half < 2; ++half) {
            const std::size_t index = 2 * pair + half;
            if (index < first || index >= end) continue;
            double* row = out.data() + (index - first) * n;
            for (std::size_t j = 0; j < n; ++j) row[j] = z[2 * j + half];
        }
    }
}

double transfer_gain_squared(double alpha, double beta, double omega)
{
    using cd = std::complex<double>;
    const double c = alpha * alpha + beta * beta;
    const cd s{0.0, omega};
    const cd h = std::sqrt(2.0 * beta) * (s + std::sqrt(c)) / (s * s + 2.0 * beta * s + c);
    return std::norm(h);
}

state_space_model make_state_space(double alpha, double beta, double dt)
{
    const double c = alpha * alpha + beta * beta;
    // Denominator s^2 + 2 beta s + c is Hurwitz iff beta > 0 and c > 0.
    if (!(beta > 0.0) || !(c > 0.0) || !(alpha > 0.0))
        throw domain_error("state-space factorization: non-Hurwitz denominator");
    if (!(dt > 0.0)) throw domain_error("state-space factorization: dt must be positive");

    state_space_model sys{};
    sys.drift = {0.0, 1.0, -c, -2.0 * beta};
    const double gain = std::sqrt(2.0 * beta);
    sys.output = {gain * std::sqrt(c), gain};
    sys.stationary = {1.0 / (4.0 * beta * c), 0.0, 0.0, 1.0 / (4.0 * beta)};

    // e^{A dt} = e^{-beta dt} [cos(alpha dt) I + sin(alpha dt)/alpha (A + beta I)]
    const double decay = std::exp(-beta * dt);
    const double cs = std::cos(alpha * dt);
    const double sn = std::sin(alpha * dt) / alpha;
    sys.transition = {decay * (cs + sn * beta), decay * sn, decay * (-c * sn),
                      decay * (cs + sn * (-beta))};

    const auto& f = sys.transition;
    const auto& p = sys.stationary;
    // Phi P Phi^T with P diagonal
    const double q11 = p[0] - (f[0] * f[0] * p[0] + f[1] * f[1] * p[3]);
    const double q12 = p[1] - (f[0] * f[2] * p[0] + f[1] * f[3] * p[3]);
    const double q22 = p[3] - (f[2] * f[2] * p[0] + f[3] * f[3] * p[3]);
    sys.step_noise = {q11, q12, q12, q22};
    if (!(q11 > 0.0)) throw domain_error("state-space: step noise covariance not positive");
    const double l11 = std::sqrt(q11);
    const double l21 = q12 / l11;
    const double l22 = std::sqrt(std::max(q22 - l21 * l21, 0.0));
    sys.step_chol = {l11, l21, l22};
    sys.stationary_chol_diag = {std::sqrt(p[0]), std::sqrt(p[3])};
    return sys;
}

state_space_sampler::state_space_sampler(double alpha, double beta, path_grid grid)
    : model_(covariance_model::exp_cosine(alpha, beta)), grid_(grid),
      system_(make_state_space(alpha, beta, grid.dt))
{
    validate(grid_);
}

void state_space_sampler::generate(std::uint64_t seed, std::size_t first, std::size_t count,
                                   std::span<double> out) const
{
    const std::size_t n = grid_.n_steps;
    std::vector<double> noise(2 * n);
    const auto& f = system_.transition;
    const auto& l = system_.step_chol;
    const auto& c = system_.output;
    for (std::size_t i = 0; i < count; ++i) {
        philox_stream rng(seed, first + i, rng_purpose::state_space);
        rng.fill_normal(noise);
        double x1 = system_.stationary_chol_diag[0] * noise[0];
        double x2 = system_.stationary_chol_diag[1] * noise[1];
        double* row = out.data() + i * n;
        row[0] = c[0] * x1 + c[1] * x2;
        for (std::size_t k = 1; k < n; ++k) {
            const double xi1 = noise[2 * k];
            const double xi2 = noise[2 * k + 1];
            const double y1 = f[0] * x1 + f[1] * x2 + l[0] * xi1;
            const double y2 = f[2] * x1 + f[3] * x2 + l[1] * xi1 + l[2] * xi2;
            x1 = y1;
            x2 = y2;
            row[k] = c[0] * x1 + c[1] * x2;
        }
    }
}

std::unique_ptr<path_sampler> make_sampler(sampler_kind kind, const covariance_model& model,
                                           const path_grid& grid)
{
    if (kind == sampler_kind::state_space) {
        if (model.family() != covariance_family::exp_cosine)
            throw unsupported_family_error(
                "state-space sampler needs the exp-cosine (rational spectrum) family");
        return std::make_unique<state_space_sampler>(model.alpha(), model.beta(), grid);
    }
    return std::make_unique<circulant_sampler>(model, grid, plan_embedding(model, grid));
}

std::vector<double> covariance_profile(const covariance_model& model, const path_grid& grid)
{
    std::vector<double> g(grid.n_steps);
    for (std::size_t k = 0; k < grid.n_steps; ++k) g[k] = model(grid.time(k));
    return g;
}

void apply_conditioning(const conditioning& cond, std::span<const double> profile,
                        std::uint64_t seed, std::size_t first, std::size_t count,
                        std::size_t n_steps, std::span<double> values)
{
    if (std::holds_alternative<unconditional>(cond)) return;
    const auto& k = kernels::active();
    for (std::size_t i = 0; i < count; ++i) {
        double* row = values.data() + i * n_steps;
        double x0 = 0.0;
        if (const auto* fs = std::get_if<fixed_start>(&cond)) {
            x0 = fs->x0;
        } else {
            philox_stream rng(seed, first + i, rng_purpose::initial_state);
            x0 = upcrossing_initial_sample(std::get<truncated_start>(cond).spec, rng);
        }
        k.shift_by_profile(row, profile.data(), x0 - row[0], row, n_steps);
        row[0] = x0;
    }
}

sample_path_batch generate_batch(const path_sampler& sampler, std::size_t n_paths,
                                 std::uint64_t seed, const conditioning& cond, unsigned workers,
                                 std::size_t first)
{
    const auto& grid = sampler.grid();
    sample_path_batch batch{grid, seed, cond, first, n_paths, {}};
    batch.values.resize(n_paths * grid.n_steps);
    const auto profile = covariance_profile(sampler.model(), grid);
    const std::size_t n = grid.n_steps;
    parallel_for_chunks(n_paths, 32, workers, [&](std::size_t b, std::size_t e) {
        std::span<double> block{batch.values.data() + b * n, (e - b) * n};
        sampler.generate(seed, first + b, e - b, block);
        apply_conditioning(cond, profile, seed, first + b, e - b, n, block);
    });
    return batch;
}

} // namespace fptlab
