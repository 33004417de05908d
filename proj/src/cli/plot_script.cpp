#include "fptlab/cli/plot_script.hpp"

#include "fptlab/error.hpp"

#include <charconv>
#include <cstdio>
#include <vector>

namespace fptlab::cli {
namespace {

std::string series(const plot_input& in)
{
    const std::string f = "'" + in.file.generic_string() + "'";
    if (in.histogram)
        return f + " using 1:3 with steps title '" + in.label + "'";
    return f + " using 1:2 with lines title '" + in.label + "'";
}

void panel(std::ostream& os, const char* tag, const std::vector<std::string>& plots,
           const char* ylabel = "density")
{
    os << "set title '(" << tag << ")'\nset ylabel '" << ylabel << "'\nplot ";
    for (std::size_t i = 0; i < plots.size(); ++i) os << (i ? ", \\\n     " : "") << plots[i];
    os << "\n\n";
}

} // namespace

void emit_plot_script(std::ostream& os, std::span<const plot_input> inputs,
                      const std::optional<plot_fit>& fit, const std::filesystem::path& dir)
{
    if (inputs.empty()) throw missing_file_error("no outputs to plot");
    for (const auto& in : inputs)
        if (!std::filesystem::exists(dir / in.file))
            throw missing_file_error("plot input not found: " + (dir / in.file).string());
    if (fit && !std::filesystem::exists(dir / fit->z_file))
        throw missing_file_error("plot input not found: " + (dir / fit->z_file).string());

    os << "# gnuplot -p plot.gp\n"
          "set termoption noenhanced\n"
          "set datafile separator ','\n"
          "set key top right\n"
          "set xlabel 't'\n"
          "set multiplot layout 2,2\n\n";

    const char* tags[] = {"a", "b", "c", "d"};
    if (!fit) {
        for (std::size_t i = 0; i < inputs.size() && i < 4; ++i) panel(os, tags[i], {series(inputs[i])});
    }
    else {
        const plot_input* fitted = &inputs.front();
        for (const auto& in : inputs)
            if (in.label == fit->fitted_label) fitted = &in;
        char buf[64];
        const std::string lam(buf, std::to_chars(buf, buf + sizeof buf, fit->lambda_hat).ptr);
        panel(os, "a", {series(*fitted)});
        panel(os, "b",
              {series(*fitted), lam + "*exp(-" + lam + "*x) with lines title 'exponential fit'"});
        panel(os, "c", {"'" + fit->z_file.generic_string() + "' using 1:2 with lines title 'Z(t)'"}, "Z");
        std::vector<std::string> rest;
        for (const auto& in : inputs)
            if (&in != fitted) rest.push_back(series(in));
        if (rest.empty()) rest.push_back(series(*fitted));
        panel(os, "d", rest);
    }
    os << "unset multiplot\n";
}

} // namespace fptlab::cli
