#pragma once

// Experiment configuration: flat key = value text grouped by [section].
//
//   [process]     family (exp_cosine | damped_oscillatory | wiener), alpha, beta
//   [boundary]    family (constant | periodic | daniels_ou | polynomial) and its
//                 parameters: s0; s0, amplitude, period; d, beta; coeffs
//   [grid]        dt, t_max
//   [methods]     run = comma list of mc, mc-upcrossing, volterra, closed-form, asymptotic
//   [simulation]  n_paths, seed, bin_width, epsilon, x0, sampler, crossing,
//                 upcrossing (conditional | rejection | both), workers, dump_paths
//   [volterra]    h
//   [output]      dir

#include "fptlab/boundary.hpp"
#include "fptlab/covariance.hpp"
#include "fptlab/crossing.hpp"
#include "fptlab/sampler.hpp"

#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fptlab::cli {

enum class process_family { exp_cosine, damped_oscillatory, wiener };
enum class boundary_family { constant, periodic, daniels_ou, polynomial };
enum class method { mc, mc_upcrossing, volterra, closed_form, asymptotic };
enum class upcrossing_mode { conditional, rejection, both };

struct experiment_config {
    process_family process = process_family::exp_cosine;
    double alpha = 0.0;
    double beta = 1.0;

    boundary_family boundary = boundary_family::constant;
    double s0 = 1.0;
    double amplitude = 0.0;
    double period = 1.0;
    double d = 0.0;
    double boundary_beta = 0.0;
    std::vector<double> coeffs;

    double dt = 0.01;
    double t_max = 10.0;

    std::vector<method> methods;

    std::size_t n_paths = 100000;
    std::uint64_t seed = 1;
    double bin_width = 0.05;
    std::optional<double> epsilon;  // unset: 0.1 * S(0)
    double x0 = 0.0;
    sampler_kind sampler = sampler_kind::circulant;
    std::optional<crossing_rule> crossing;  // unset: chosen from path roughness
    upcrossing_mode upcrossing = upcrossing_mode::conditional;
    unsigned workers = 0;
    std::size_t dump_paths = 0;

    double h = 1e-3;

    std::string out_dir = "out";

    bool operator==(const experiment_config&) const = default;

    bool has(method m) const;
    double effective_epsilon() const;
};

/// Parsed config plus the line of every key seen, for error messages.
struct parsed_config {
    experiment_config config;
    std::map<std::string, int> lines;  // "section.key" -> line
};

/// Throws config_error with the offending line number.
parsed_config parse_config(std::istream& in);
parsed_config load_config(const std::filesystem::path& file);

/// Canonical text; parse_config(serialize(c)).config == c.
std::string serialize(const experiment_config& c);

/// Parameter domains and method/process compatibility. Throws config_error.
void validate(const parsed_config& parsed);
void validate(const experiment_config& c);

const char* method_name(method m) noexcept;
const char* process_name(process_family f) noexcept;
const char* boundary_name(boundary_family f) noexcept;

/// Objects named by the config. The process must be stationary (not wiener).
covariance_model make_covariance(const experiment_config& c);
fptlab::boundary make_boundary(const experiment_config& c);

} // namespace fptlab::cli
