#pragma once

#include "fptlab/density.hpp"

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fptlab::cli {

/// A density on the time axis: either a histogram (x holds n + 1 bin edges)
/// or a sampled curve (x holds the sample times, linear in between).
struct curve {
    enum class kind { histogram, points };

    std::string label;
    kind type = kind::points;
    std::vector<double> x;
    std::vector<double> y;
    /// Crossing times (+inf when censored) for sample-based statistics.
    std::vector<double> samples;
    std::optional<double> lambda_hat;

    double support_begin() const { return x.front(); }
    double support_end() const { return x.back(); }
};

curve from_estimate(std::string label, const fpt_density_estimate& est);
curve from_points(std::string label, std::vector<double> t, std::vector<double> g);

/// Reads a histogram CSV (t_left,t_right,density,...) or a two-column curve
/// CSV (t,<name>). The label defaults to the file stem.
curve read_curve_csv(const std::filesystem::path& file);

/// Histogram: sum of density * width. Curve: trapezoid.
double total_mass(const curve& c);

/// Histogram: centre of the first tallest bin. Curve: first argmax.
double mode_location(const curve& c);
double peak_height(const curve& c);

/// Mean value of the curve over each [edges[i], edges[i+1]]. Histograms are
/// averaged by overlap, sampled curves by integrating the linear interpolant,
/// so total mass over the covered range is conserved.
std::vector<double> rebin(const curve& c, std::span<const double> edges);

} // namespace fptlab::cli
