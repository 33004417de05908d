// fptlab command line: run experiments, compare density CSVs, tabulate the
// periodic-boundary hazard and compute correlation times.

#include "fptlab/cli/compare.hpp"
#include "fptlab/cli/config.hpp"
#include "fptlab/cli/runner.hpp"
#include "fptlab/correlation_time.hpp"
#include "fptlab/error.hpp"
#include "fptlab/hazard.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

namespace {

using namespace fptlab;

// key=value tokens, or files of key=value lines ([sections] and # comments ignored).
std::map<std::string, std::string> read_params(const std::vector<std::string>& args,
                                               const std::set<std::string>& allowed)
{
    std::map<std::string, std::string> out;
    auto add = [&](const std::string& text, const std::string& where) {
        const auto eq = text.find('=');
        if (eq == std::string::npos) throw config_error(where + ": expected key=value");
        auto trim = [](std::string s) {
            s.erase(0, s.find_first_not_of(" \t\r"));
            s.erase(s.find_last_not_of(" \t\r") + 1);
            return s;
        };
        const std::string key = trim(text.substr(0, eq));
        if (!allowed.contains(key)) throw config_error(where + ": unknown parameter '" + key + "'");
        out[key] = trim(text.substr(eq + 1));
    };
    for (const auto& a : args) {
        if (a.find('=') != std::string::npos) {
            add(a, "argument '" + a + "'");
            continue;
        }
        std::ifstream in(a);
        if (!in) throw config_error("cannot open parameter file " + a);
        std::string line;
        int n = 0;
        while (std::getline(in, line)) {
            ++n;
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.resize(hash);
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            if (line.find('[') != std::string::npos && line.find('=') == std::string::npos) continue;
            add(line, a + ":" + std::to_string(n));
        }
    }
    return out;
}

double number(const std::map<std::string, std::string>& p, const std::string& key,
              std::optional<double> fallback = std::nullopt)
{
    auto it = p.find(key);
    if (it == p.end()) {
        if (fallback) return *fallback;
        throw config_error("missing parameter '" + key + "'");
    }
    double x = 0.0;
    const auto& s = it->second;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw config_error("parameter '" + key + "' expects a number, got '" + s + "'");
    return x;
}

std::ostream& output(const std::string& path, std::ofstream& file)
{
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw config_error("cannot write " + path);
    return file;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"First-passage-time densities of stationary Gaussian processes"};
    app.require_subcommand(1);

    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> paths;
    std::optional<unsigned> workers;
    std::string out;
    bool quiet = false;

    auto* run = app.add_subcommand("run", "Run the methods listed in an experiment config");
    run->add_option("config", config_path, "Experiment config file")->required();
    run->add_option("--seed", seed, "Override simulation.seed");
    run->add_option("--paths", paths, "Override simulation.n_paths");
    run->add_option("--out", out, "Override output.dir");
    run->add_option("--workers", workers, "Override simulation.workers (0 = all cores)");
    run->add_flag("-q,--quiet", quiet, "No progress output");

    std::vector<std::string> csvs;
    auto* cmp = app.add_subcommand("compare", "Compare density CSVs on their coarsest common grid");
    cmp->add_option("csv", csvs, "Histogram or t,value CSV files")->required()->expected(2, -1);
    cmp->add_option("--out", out, "Write the report here instead of stdout");

    std::vector<std::string> hazard_args;
    bool density = false;
    auto* hz = app.add_subcommand(
        "hazard", "Tabulate the periodic-boundary hazard (s0, amplitude, period, alpha, beta; "
                  "optional t_max, dt)");
    hz->add_option("params", hazard_args, "key=value pairs or parameter files")->required();
    hz->add_flag("--density", density, "Write the asymptotic density t,g instead of t,h");
    hz->add_option("--out", out, "CSV file (default stdout)");

    std::vector<std::string> theta_args;
    auto* th = app.add_subcommand("theta", "Correlation time of a covariance (family, alpha, beta)");
    th->add_option("params", theta_args, "key=value pairs or parameter files")->required();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*run) {
            auto parsed = cli::load_config(config_path);
            cli::validate(parsed);
            auto& c = parsed.config;
            if (seed) c.seed = *seed;
            if (paths) c.n_paths = *paths;
            if (workers) c.workers = *workers;
            if (!out.empty()) c.out_dir = out;
            const auto result = cli::run_experiment(c, quiet ? nullptr : &std::cerr);
            if (result.report && !quiet) cli::write_report(std::cout, *result.report);
        }
        else if (*cmp) {
            std::vector<cli::curve> curves;
            for (const auto& f : csvs) curves.push_back(cli::read_curve_csv(f));
            std::set<std::string> labels;
            for (const auto& cv : curves) labels.insert(cv.label);
            if (labels.size() < curves.size()) {
                // Same file name in several run directories: qualify with the directory.
                for (std::size_t i = 0; i < curves.size(); ++i) {
                    const std::filesystem::path f = csvs[i];
                    if (f.has_parent_path())
                        curves[i].label = f.parent_path().filename().string() + "/" + curves[i].label;
                }
            }
            const auto report = cli::compare(curves);
            std::ofstream file;
            cli::write_report(output(out, file), report);
        }
        else if (*hz) {
            const auto p = read_params(hazard_args,
                                       {"s0", "amplitude", "period", "alpha", "beta", "t_max", "dt"});
            const hazard_params hp{number(p, "s0"), number(p, "amplitude"), number(p, "period"),
                                   number(p, "alpha"), number(p, "beta")};
            try {
                validate(hp);
            }
            catch (const domain_error& e) {
                throw config_error(e.what());
            }
            const double t_max = number(p, "t_max", 150.0);
            const double dt = number(p, "dt", 0.01);
            if (!(dt > 0.0) || !(t_max > 0.0)) throw config_error("dt and t_max must be positive");
            std::vector<double> t;
            for (std::size_t k = 0; static_cast<double>(k) * dt <= t_max + 1e-12 * t_max; ++k)
                t.push_back(static_cast<double>(k) * dt);
            const auto curve = hazard_on(hp, t);
            for (const auto& w : curve.warnings) std::cerr << "warning: " << w << '\n';
            std::cerr << "mean hazard over one period: " << mean_hazard(hp) << '\n';
            std::ofstream file;
            auto& os = output(out, file);
            if (density) {
                const auto g = asymptotic_density(hp, t);
                write_curve_csv(os, t, g, "g");
            }
            else {
                write_curve_csv(os, t, curve.h, "h");
            }
        }
        else if (*th) {
            const auto p = read_params(theta_args, {"family", "alpha", "beta"});
            auto it = p.find("family");
            if (it == p.end()) throw config_error("missing parameter 'family'");
            const double alpha = number(p, "alpha", 0.0);
            const double beta = number(p, "beta");
            covariance_model model = [&] {
                try {
                    if (it->second == "exp_cosine") return covariance_model::exp_cosine(alpha, beta);
                    if (it->second == "damped_oscillatory")
                        return covariance_model::damped_oscillatory(alpha, beta);
                }
                catch (const domain_error& e) {
                    throw config_error(e.what());
                }
                throw config_error("family must be exp_cosine or damped_oscillatory");
            }();
            std::printf("%.15g\n", correlation_time(model));
        }
    }
    catch (const config_error& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 1;
    }
    catch (const missing_file_error& e) {
        std::cerr << "missing file: " << e.what() << '\n';
        return 1;
    }
    catch (const numerical_error& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return 2;
    }
    catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "file system error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
