#pragma once

#include "fptlab/covariance.hpp"
#include "fptlab/embedding.hpp"
#include "fptlab/fft.hpp"
#include "fptlab/path_batch.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <span>

namespace fptlab {

/// Exact sampler of the stationary (unconditioned) process on a grid.
/// generate() must depend only on (seed, global path index) so any split
/// of the index range across workers produces identical paths.
class path_sampler {
public:
    virtual ~path_sampler() = default;
    virtual const path_grid& grid() const noexcept = 0;
    virtual const covariance_model& model() const noexcept = 0;
    /// Fills out[count * n_steps] with paths first .. first+count-1.
    virtual void generate(std::uint64_t seed, std::size_t first, std::size_t count,
                          std::span<double> out) const = 0;
};

/// Circulant-embedding sampler: one complex FFT yields paths 2p and 2p+1.
class circulant_sampler final : public path_sampler {
public:
    circulant_sampler(covariance_model model, path_grid grid, embedding_plan plan);

    const path_grid& grid() const noexcept override { return grid_; }
    const covariance_model& model() const noexcept override { return model_; }
    const embedding_plan& plan() const noexcept { return plan_; }
    void generate(std::uint64_t seed, std::size_t first, std::size_t count,
                  std::span<double> out) const override;

private:
    covariance_model model_;
    path_grid grid_;
    embedding_plan plan_;
    std::vector<double> weights_;  // sqrt(lambda_k / m)
    std::unique_ptr<forward_fft> fft_;
};

/// 2x2 exact discretization of the rational-spectrum (exp-cosine) process:
/// x' = A x + B w, y = C x with
/// A = [[0, 1], [-(a^2+b^2), -2b]], B = [0, 1]^T, C = sqrt(2b) [sqrt(a^2+b^2), 1].
struct state_space_model {
    std::array<double, 4> drift;        // A, row-major
    std::array<double, 2> output;       // C
    std::array<double, 4> stationary;   // P with A P + P A^T + B B^T = 0
    std::array<double, 4> transition;   // e^{A dt}
    std::array<double, 4> step_noise;   // P - Phi P Phi^T
    std::array<double, 3> step_chol;    // lower Cholesky of step_noise: l11, l21, l22
    std::array<double, 2> stationary_chol_diag;
};

state_space_model make_state_space(double alpha, double beta, double dt);

/// Transfer function H(i omega) = sqrt(2b) (i omega + sqrt(a^2+b^2)) / ((i omega)^2 + 2b i omega + a^2 + b^2),
/// returned as |H(i omega)|^2.
double transfer_gain_squared(double alpha, double beta, double omega);

class state_space_sampler final : public path_sampler {
public:
    state_space_sampler(double alpha, double beta, path_grid grid);

    const path_grid& grid() const noexcept override { return grid_; }
    const covariance_model& model() const noexcept override { return model_; }
    const state_space_model& system() const noexcept { return system_; }
    void generate(std::uint64_t seed, std::size_t first, std::size_t count,
                  std::span<double> out) const override;

private:
    covariance_model model_;
    path_grid grid_;
    state_space_model system_;
};

enum class sampler_kind { circulant, state_space };

std::unique_ptr<path_sampler> make_sampler(sampler_kind kind, const covariance_model& model,
                                           const path_grid& grid);

/// Exact Gaussian update X(t) + (x0 - X(0)) gamma(t) applied in place to
/// paths first .. first+count-1 of `values`. `profile` is gamma on the grid.
void apply_conditioning(const conditioning& cond, std::span<const double> profile,
                        std::uint64_t seed, std::size_t first, std::size_t count,
                        std::size_t n_steps, std::span<double> values);

std::vector<double> covariance_profile(const covariance_model& model, const path_grid& grid);

/// n_paths conditioned paths with global indices [first, first + n_paths).
sample_path_batch generate_batch(const path_sampler& sampler, std::size_t n_paths,
                                 std::uint64_t seed, const conditioning& cond,
                                 unsigned workers = 1, std::size_t first = 0);

} // namespace fptlab
