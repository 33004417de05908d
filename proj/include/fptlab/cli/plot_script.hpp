#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <span>
#include <string>

namespace fptlab::cli {

struct plot_input {
    std::filesystem::path file;  // relative to the script's directory
    bool histogram = false;      // t_left,t_right,density,... vs t,value
    std::string label;
};

struct plot_fit {
    double lambda_hat = 0.0;
    std::string fitted_label;     // the density the fit was made on
    std::filesystem::path z_file; // t,z
};

/// gnuplot script with a 2x2 multiplot. Without a fit the first four
/// inputs get one panel each. With a fit: the fitted density, the same with
/// lambda e^{-lambda t} overlaid, Z(t), and the remaining densities
/// overlaid. Throws missing_file_error when there are no inputs or one of
/// them does not exist under `dir`.
void emit_plot_script(std::ostream& os, std::span<const plot_input> inputs,
                      const std::optional<plot_fit>& fit, const std::filesystem::path& dir);

} // namespace fptlab::cli
