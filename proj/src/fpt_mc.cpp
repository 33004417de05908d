#include "fptlab/fpt_mc.hpp"

#include "fptlab/error.hpp"
#include "fptlab/normal.hpp"
#include "fptlab/parallel.hpp"
#include "fptlab/upcrossing.hpp"

#include <cmath>
#include <limits>

namespace fptlab {
namespace {

constexpr double censored = std::numeric_limits<double>::infinity();

crossing_options resolve_crossing(const path_sampler& sampler, const mc_options& options)
{
    auto opts = default_crossing_options(sampler.model().local_diffusion(), options.seed);
    if (options.rule) opts.rule = *options.rule;
    if (opts.rule == crossing_rule::bridge_corrected)
        opts.local_diffusion = sampler.model().local_diffusion();
    return opts;
}

fpt_density_estimate histogram(const std::vector<double>& times, const path_grid& grid,
                               double bin_width, fpt_kind kind)
{
    std::vector<std::optional<double>> c(times.size());
    for (std::size_t i = 0; i < times.size(); ++i)
        if (std::isfinite(times[i])) c[i] = times[i];
    return estimate_density(c, grid, bin_width, kind);
}

/// Runs paths [first, first + count) and writes one outcome per path:
/// crossing time, +inf if censored, NaN if rejected.
void run_paths(const path_sampler& sampler, const std::vector<double>& s,
               const std::vector<double>& profile, const conditioning& cond,
               std::optional<double> reject_at_or_above, const crossing_options& crossing,
               const mc_options& options, std::size_t first, std::size_t count,
               std::vector<double>& outcome)
{
    const auto& grid = sampler.grid();
    const std::size_t n = grid.n_steps;
    parallel_for_chunks(count, options.chunk, options.workers, [&](std::size_t b, std::size_t e) {
        std::vector<double> block((e - b) * n);
        sampler.generate(options.seed, first + b, e - b, block);
        apply_conditioning(cond, profile, options.seed, first + b, e - b, n, block);
        for (std::size_t i = b; i < e; ++i) {
            std::span<const double> path{block.data() + (i - b) * n, n};
            if (reject_at_or_above && path[0] >= *reject_at_or_above) {
                outcome[i] = std::numeric_limits<double>::quiet_NaN();
                continue;
            }
            const auto t = first_crossing(path, s, grid, first + i, crossing);
            outcome[i] = t ? *t : censored;
        }
    });
}

} // namespace

mc_result simulate_fpt(const path_sampler& sampler, const boundary& b, const conditioning& cond,
                       const mc_options& options, fpt_kind kind)
{
    if (options.n_paths == 0) throw empty_input_error("simulate_fpt: n_paths is zero");
    const auto& grid = sampler.grid();
    const auto s = boundary_on_grid(b, grid);
    const auto profile = covariance_profile(sampler.model(), grid);
    const auto crossing = resolve_crossing(sampler, options);

    mc_result result;
    result.crossing_times.resize(options.n_paths);
    run_paths(sampler, s, profile, cond, std::nullopt, crossing, options, 0, options.n_paths,
              result.crossing_times);
    result.candidates = options.n_paths;
    result.estimate = histogram(result.crossing_times, grid, options.bin_width, kind);
    return result;
}

mc_result estimate_fpt_density(const covariance_model& model, const boundary& b,
                               const path_grid& grid, double x0, const mc_options& options)
{
    const auto sampler = make_sampler(options.sampler, model, grid);
    return simulate_fpt(*sampler, b, fixed_start{x0}, options, fpt_kind::conditioned);
}

mc_result estimate_upcrossing_density(const covariance_model& model, const boundary& b,
                                      double epsilon, const path_grid& grid,
                                      const mc_options& options, upcrossing_route route)
{
    if (!(epsilon > 0.0)) throw domain_error("upcrossing: epsilon must be positive");
    if (options.n_paths == 0) throw empty_input_error("upcrossing: n_paths is zero");
    const upcrossing_spec spec{epsilon, b};
    const double upper = spec.upper();
    const double accept = normal_cdf(upper);
    if (!(accept >= min_initial_mass))
        throw underflow_error("upcrossing: P(X(0) < S(0) - eps) is below 1e-12");

    const auto sampler = make_sampler(options.sampler, model, grid);
    if (route == upcrossing_route::conditional_start)
        return simulate_fpt(*sampler, b, truncated_start{spec}, options, fpt_kind::upcrossing);

    const auto s = boundary_on_grid(b, grid);
    const auto profile = covariance_profile(model, grid);
    const auto crossing = resolve_crossing(*sampler, options);

    // Candidates are consumed in index order, so the accepted set is the
    // same whatever the round sizes or worker count.
    mc_result result;
    std::vector<double> outcome;
    std::size_t accepted = 0;
    while (accepted < options.n_paths) {
        const std::size_t missing = options.n_paths - accepted;
        const auto round = static_cast<std::size_t>(std::ceil(1.02 * missing / accept)) + 64;
        const std::size_t first = outcome.size();
        outcome.resize(first + round);
        run_paths(*sampler, s, profile, unconditional{}, upper, crossing, options, first, round,
                  outcome);
        for (std::size_t i = first; i < outcome.size(); ++i)
            if (!std::isnan(outcome[i])) ++accepted;
    }
    result.crossing_times.reserve(options.n_paths);
    for (std::size_t i = 0; i < outcome.size() && result.crossing_times.size() < options.n_paths;
         ++i) {
        if (std::isnan(outcome[i])) continue;
        result.crossing_times.push_back(outcome[i]);
        result.candidates = i + 1;
    }
    result.estimate = histogram(result.crossing_times, grid, options.bin_width, fpt_kind::upcrossing);
    return result;
}

} // namespace fptlab
