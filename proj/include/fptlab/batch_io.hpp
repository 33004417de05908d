#pragma once

// Debug dump of a path batch:
//   "FPTB" u32 version
//   u64 n_paths, u64 n_steps, f64 dt, u64 seed, u64 first_path
//   u32 family, f64 alpha, f64 beta
//   u32 conditioning (0 unconditional, 1 fixed start, 2 truncated start), f64 x0-or-epsilon
//   n_paths * n_steps f64, row-major
// All fields little-endian.

#include "fptlab/covariance.hpp"
#include "fptlab/path_batch.hpp"

#include <cstdint>
#include <filesystem>
#include <vector>

namespace fptlab {

struct batch_header {
    std::uint32_t version = 1;
    std::uint64_t n_paths = 0;
    std::uint64_t n_steps = 0;
    double dt = 0.0;
    std::uint64_t seed = 0;
    std::uint64_t first_path = 0;
    std::uint32_t family = 0;
    double alpha = 0.0;
    double beta = 0.0;
    std::uint32_t conditioning = 0;
    double conditioning_param = 0.0;
};

struct batch_dump {
    batch_header header;
    std::vector<double> values;
};

void write_batch(const std::filesystem::path& file, const sample_path_batch& batch,
                 const covariance_model& model);

batch_dump read_batch(const std::filesystem::path& file);

} // namespace fptlab
