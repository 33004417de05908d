#pragma once

#include "fptlab/cli/curves.hpp"

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace fptlab::cli {

struct pair_metrics {
    std::string a;
    std::string b;
    double l1 = 0.0;
    double sup = 0.0;
    /// Two-sample KS statistic, present when both curves carry samples.
    std::optional<double> ks;
};

struct curve_summary {
    std::string label;
    double mode = 0.0;
    double peak = 0.0;
    double mass = 0.0;
    std::optional<double> lambda_hat;
};

struct comparison_report {
    std::vector<double> edges;  // common grid
    std::vector<curve_summary> summaries;
    std::vector<pair_metrics> pairs;

    const pair_metrics* find(const std::string& a, const std::string& b) const;
};

/// Coarsest common grid over the shared support: the edges of the coarsest
/// histogram, or uniform bins at the widest sample spacing when there are
/// only sampled curves. Throws disjoint_support_error if the supports do
/// not overlap.
std::vector<double> common_grid(std::span<const curve> curves);

/// Two-sample Kolmogorov-Smirnov statistic; +inf entries count as censored
/// mass above every finite time.
double ks_statistic(std::vector<double> a, std::vector<double> b);

/// All pairwise metrics on the common grid. Needs at least two curves.
comparison_report compare(std::span<const curve> curves);

void write_report(std::ostream& os, const comparison_report& report);

} // namespace fptlab::cli
