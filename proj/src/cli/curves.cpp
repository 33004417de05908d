#include "fptlab/cli/curves.hpp"

#include "fptlab/error.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace fptlab::cli {
namespace {

std::vector<std::string> split_csv(const std::string& line)
{
    std::vector<std::string> out;
    std::string cell;
    std::istringstream is(line);
    while (std::getline(is, cell, ',')) {
        const auto b = cell.find_first_not_of(" \t\r");
        const auto e = cell.find_last_not_of(" \t\r");
        out.push_back(b == std::string::npos ? std::string{} : cell.substr(b, e - b + 1));
    }
    return out;
}

double parse_cell(const std::string& s, const std::filesystem::path& file, int line)
{
    double x = 0.0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw config_error(file.string() + ": not a number '" + s + "'", line);
    return x;
}

// Integral over [a, b] of the linear interpolant through (t, g); zero outside.
double integrate_linear(std::span<const double> t, std::span<const double> g, double a, double b)
{
    double sum = 0.0;
    for (std::size_t k = 0; k + 1 < t.size(); ++k) {
        const double lo = std::max(a, t[k]);
        const double hi = std::min(b, t[k + 1]);
        if (!(hi > lo)) continue;
        const double slope = (g[k + 1] - g[k]) / (t[k + 1] - t[k]);
        const double glo = g[k] + slope * (lo - t[k]);
        const double ghi = g[k] + slope * (hi - t[k]);
        sum += 0.5 * (glo + ghi) * (hi - lo);
    }
    return sum;
}

} // namespace

curve from_estimate(std::string label, const fpt_density_estimate& est)
{
    curve c;
    c.label = std::move(label);
    c.type = curve::kind::histogram;
    c.x = est.bin_edges;
    c.y = est.density;
    return c;
}

curve from_points(std::string label, std::vector<double> t, std::vector<double> g)
{
    if (t.size() != g.size() || t.size() < 2)
        throw empty_input_error("a curve needs at least two (t, value) points");
    curve c;
    c.label = std::move(label);
    c.type = curve::kind::points;
    c.x = std::move(t);
    c.y = std::move(g);
    return c;
}

curve read_curve_csv(const std::filesystem::path& file)
{
    std::ifstream in(file);
    if (!in) throw missing_file_error("cannot open " + file.string());
    std::string line;
    if (!std::getline(in, line)) throw empty_input_error(file.string() + ": empty file");
    const auto header = split_csv(line);
    const bool histogram = header.size() >= 3 && header[0] == "t_left" && header[1] == "t_right"
                           && header[2] == "density";
    const bool points = !histogram && header.size() == 2 && header[0] == "t";
    if (!histogram && !points)
        throw config_error(file.string() + ": unrecognised header '" + line + "'", 1);

    curve c;
    c.label = file.stem().string();
    c.type = histogram ? curve::kind::histogram : curve::kind::points;
    int n = 1;
    while (std::getline(in, line)) {
        ++n;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto cells = split_csv(line);
        if (cells.size() != header.size())
            throw config_error(file.string() + ": wrong number of columns", n);
        if (histogram) {
            const double left = parse_cell(cells[0], file, n);
            const double right = parse_cell(cells[1], file, n);
            if (c.x.empty()) c.x.push_back(left);
            else if (left != c.x.back())
                throw config_error(file.string() + ": bins are not contiguous", n);
            if (!(right > left)) throw config_error(file.string() + ": empty bin", n);
            c.x.push_back(right);
            c.y.push_back(parse_cell(cells[2], file, n));
        }
        else {
            const double t = parse_cell(cells[0], file, n);
            if (!c.x.empty() && !(t > c.x.back()))
                throw config_error(file.string() + ": times must increase", n);
            c.x.push_back(t);
            c.y.push_back(parse_cell(cells[1], file, n));
        }
    }
    if (c.y.empty() || (points && c.y.size() < 2))
        throw empty_input_error(file.string() + ": no data rows");
    return c;
}

double total_mass(const curve& c)
{
    if (c.type == curve::kind::histogram) {
        double m = 0.0;
        for (std::size_t i = 0; i < c.y.size(); ++i) m += c.y[i] * (c.x[i + 1] - c.x[i]);
        return m;
    }
    return integrate_linear(c.x, c.y, c.x.front(), c.x.back());
}

double mode_location(const curve& c)
{
    const auto i = static_cast<std::size_t>(std::max_element(c.y.begin(), c.y.end()) - c.y.begin());
    if (c.type == curve::kind::histogram) return 0.5 * (c.x[i] + c.x[i + 1]);
    return c.x[i];
}

double peak_height(const curve& c) { return *std::max_element(c.y.begin(), c.y.end()); }

std::vector<double> rebin(const curve& c, std::span<const double> edges)
{
    std::vector<double> out(edges.size() - 1, 0.0);
    for (std::size_t j = 0; j + 1 < edges.size(); ++j) {
        const double a = edges[j];
        const double b = edges[j + 1];
        double integral = 0.0;
        if (c.type == curve::kind::histogram) {
            for (std::size_t i = 0; i < c.y.size(); ++i) {
                const double overlap = std::min(b, c.x[i + 1]) - std::max(a, c.x[i]);
                if (overlap > 0.0) integral += c.y[i] * overlap;
            }
        }
        else {
            integral = integrate_linear(c.x, c.y, a, b);
        }
        out[j] = integral / (b - a);
    }
    return out;
}

} // namespace fptlab::cli
