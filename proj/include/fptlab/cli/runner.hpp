#pragma once

#include "fptlab/cli/compare.hpp"
#include "fptlab/cli/config.hpp"

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace fptlab::cli {

struct run_result {
    std::vector<std::filesystem::path> written;
    std::vector<curve> curves;
    std::optional<comparison_report> report;
    std::string summary_json;
};

/// Runs every requested method, then writes into c.out_dir:
///   <method>.csv        densities (histograms for mc*, t,g curves otherwise)
///   hazard.csv          t,h (asymptotic)
///   fit_<method>.txt    exponential fit + periodicity (periodic boundary)
///   fit_<method>_z.csv  t,z
///   summary.json, report.txt, plot.gp, and paths.bin when dump_paths > 0.
/// Nothing is written until every method has finished; each file goes
/// through a temporary and a rename. `log` receives progress lines.
run_result run_experiment(const experiment_config& c, std::ostream* log = nullptr);

/// Writes `content` to `file` via a sibling temporary and rename.
void write_file_atomic(const std::filesystem::path& file, const std::string& content);

} // namespace fptlab::cli
