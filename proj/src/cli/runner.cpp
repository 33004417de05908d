#include "fptlab/cli/runner.hpp"

#include "fptlab/batch_io.hpp"
#include "fptlab/daniels.hpp"
#include "fptlab/error.hpp"
#include "fptlab/exp_fit.hpp"
#include "fptlab/fpt_mc.hpp"
#include "fptlab/gauss_markov.hpp"
#include "fptlab/hazard.hpp"
#include "fptlab/volterra.hpp"
#include "fptlab/cli/plot_script.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace fptlab::cli {
namespace {

using json = nlohmann::ordered_json;
using clock_type = std::chrono::steady_clock;

double elapsed_ms(clock_type::time_point start)
{
    return std::chrono::duration<double, std::milli>(clock_type::now() - start).count();
}

struct pending_file {
    std::string name;
    std::string content;
};

struct fit_output {
    std::string label;
    exp_fit fit;
    periodicity_report periodicity;
};

json config_echo(const experiment_config& c)
{
    // Mirror of the canonical text form, one object per section.
    json out = json::object();
    std::istringstream in(serialize(c));
    std::string line;
    std::string section;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.front() == '[') {
            section = line.substr(1, line.size() - 2);
            out[section] = json::object();
            continue;
        }
        const auto eq = line.find(" = ");
        out[section][line.substr(0, eq)] = line.substr(eq + 3);
    }
    return out;
}

std::string to_csv(const fpt_density_estimate& est)
{
    std::ostringstream os;
    write_csv(os, est);
    return os.str();
}

std::string to_csv(std::span<const double> t, std::span<const double> v, const char* name)
{
    std::ostringstream os;
    write_curve_csv(os, t, v, name);
    return os.str();
}

// Mean of the asymptotic density over each histogram bin.
std::vector<double> bin_average(const hazard_params& p, std::span<const double> edges)
{
    constexpr int sub = 50;
    std::vector<double> t;
    t.reserve((edges.size() - 1) * sub);
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
        for (int k = 0; k < sub; ++k)
            t.push_back(edges[i] + (k + 0.5) * (edges[i + 1] - edges[i]) / sub);
    const auto g = asymptotic_density(p, t);
    std::vector<double> out(edges.size() - 1);
    for (std::size_t i = 0; i < out.size(); ++i) {
        double s = 0.0;
        for (int k = 0; k < sub; ++k) s += g[i * sub + k];
        out[i] = s / sub;
    }
    return out;
}

std::vector<double> histogram_edges(double t_max, double width)
{
    const auto n = static_cast<std::size_t>(std::ceil(t_max / width - 1e-9));
    std::vector<double> edges(n + 1);
    for (std::size_t i = 0; i <= n; ++i) edges[i] = static_cast<double>(i) * width;
    return edges;
}

} // namespace

void write_file_atomic(const std::filesystem::path& file, const std::string& content)
{
    auto tmp = file;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, file);
}

run_result run_experiment(const experiment_config& c, std::ostream* log)
{
    validate(c);
    auto say = [&](const std::string& msg) {
        if (log != nullptr) *log << msg << std::endl;
    };

    run_result result;
    std::vector<pending_file> files;
    std::vector<plot_input> plots;
    std::vector<fit_output> fits;
    json methods = json::object();

    const auto b = make_boundary(c);
    const path_grid grid = path_grid::covering(c.dt, c.t_max);
    const bool periodic = c.boundary == boundary_family::periodic;

    mc_options opts;
    opts.n_paths = c.n_paths;
    opts.seed = c.seed;
    opts.bin_width = c.bin_width;
    opts.workers = c.workers;
    opts.sampler = c.sampler;
    opts.rule = c.crossing;

    auto fit_histogram = [&](const std::string& label, std::span<const double> edges,
                             std::span<const double> density, json& entry) -> std::optional<double> {
        if (!periodic) return std::nullopt;
        try {
            fit_output f{label, fit_exponential(edges, density, c.period), {}};
            f.periodicity = periodicity_check(f.fit, c.period);
            entry["lambda_hat"] = f.fit.lambda_hat;
            entry["fit_window"] = {f.fit.t_a, f.fit.t_b};
            entry["periodicity_corr"] = f.periodicity.correlation;
            entry["periodicity_pass"] = f.periodicity.pass;
            const double lambda = f.fit.lambda_hat;
            fits.push_back(std::move(f));
            return lambda;
        }
        catch (const insufficient_support_error& e) {
            entry["fit_error"] = e.what();
            return std::nullopt;
        }
    };

    auto add_mc = [&](const std::string& label, const mc_result& r, double ms) {
        json entry;
        entry["n_paths"] = r.estimate.n_paths;
        entry["candidates"] = r.candidates;
        entry["censored"] = r.estimate.n_censored;
        curve cv = from_estimate(label, r.estimate);
        cv.samples = r.crossing_times;
        entry["mass"] = total_mass(cv);
        entry["mode"] = mode_location(cv);
        entry["runtime_ms"] = ms;
        cv.lambda_hat = fit_histogram(label, r.estimate.bin_edges, r.estimate.density, entry);
        files.push_back({label + ".csv", to_csv(r.estimate)});
        plots.push_back({label + ".csv", true, label});
        methods[label] = std::move(entry);
        result.curves.push_back(std::move(cv));
    };

    for (method m : c.methods) {
        const auto start = clock_type::now();
        switch (m) {
        case method::mc: {
            say("mc: " + std::to_string(c.n_paths) + " paths");
            const auto model = make_covariance(c);
            const auto r = estimate_fpt_density(model, b, grid, c.x0, opts);
            add_mc("mc", r, elapsed_ms(start));
            break;
        }
        case method::mc_upcrossing: {
            const auto model = make_covariance(c);
            const double eps = c.effective_epsilon();
            if (c.upcrossing != upcrossing_mode::rejection) {
                say("mc-upcrossing (conditional start): " + std::to_string(c.n_paths) + " paths");
                const auto r = estimate_upcrossing_density(model, b, eps, grid, opts,
                                                           upcrossing_route::conditional_start);
                add_mc("mc_upcrossing", r, elapsed_ms(start));
            }
            if (c.upcrossing != upcrossing_mode::conditional) {
                say("mc-upcrossing (rejection): " + std::to_string(c.n_paths) + " paths");
                const auto t0 = clock_type::now();
                const auto r =
                    estimate_upcrossing_density(model, b, eps, grid, opts, upcrossing_route::rejection);
                add_mc(c.upcrossing == upcrossing_mode::both ? "mc_upcrossing_rejection"
                                                             : "mc_upcrossing",
                       r, elapsed_ms(t0));
            }
            break;
        }
        case method::volterra: {
            say("volterra: h = " + std::to_string(c.h));
            const auto spec = c.process == process_family::wiener ? wiener() : ou_zero_start(c.beta);
            const auto sol = solve_volterra(spec, b, c.x0, c.h, c.t_max);
            std::vector<double> t{0.0};
            std::vector<double> g{0.0};
            t.insert(t.end(), sol.t.begin(), sol.t.end());
            g.insert(g.end(), sol.g.begin(), sol.g.end());
            // g(0) = 0 for a start below the boundary; writing it keeps the
            // curve's support aligned with the histograms'
            files.push_back({"volterra.csv", to_csv(t, g, "g")});
            curve cv = from_points("volterra", std::move(t), std::move(g));
            json entry;
            entry["h"] = c.h;
            entry["mass"] = sol.mass();
            entry["mode"] = mode_location(cv);
            entry["runtime_ms"] = elapsed_ms(start);
            plots.push_back({"volterra.csv", false, "volterra"});
            methods["volterra"] = std::move(entry);
            result.curves.push_back(std::move(cv));
            break;
        }
        case method::closed_form: {
            say("closed-form");
            // the density rises steeply over the first few hundredths, so sample
            // it at least as finely as the Volterra step
            const auto fine = path_grid::covering(std::min(c.dt, c.h), c.t_max);
            std::vector<double> t(fine.n_steps);
            std::vector<double> g(fine.n_steps, 0.0);
            for (std::size_t k = 0; k < fine.n_steps; ++k) {
                t[k] = fine.time(k);
                if (k > 0) g[k] = closed_form_daniels(c.d, c.boundary_beta, t[k]);
            }
            files.push_back({"closed_form.csv", to_csv(t, g, "g")});
            plots.push_back({"closed_form.csv", false, "closed-form"});
            curve cv = from_points("closed_form", std::move(t), std::move(g));
            json entry;
            entry["h"] = fine.dt;
            entry["mass"] = total_mass(cv);
            entry["mode"] = mode_location(cv);
            entry["runtime_ms"] = elapsed_ms(start);
            methods["closed_form"] = std::move(entry);
            result.curves.push_back(std::move(cv));
            break;
        }
        case method::asymptotic: {
            say("asymptotic");
            const hazard_params p{c.s0, c.amplitude, c.period, c.alpha, c.beta};
            std::vector<double> t(grid.n_steps);
            for (std::size_t k = 0; k < grid.n_steps; ++k) t[k] = grid.time(k);
            const auto hz = hazard_on(p, t);
            auto g = asymptotic_density(p, t);
            files.push_back({"hazard.csv", to_csv(t, hz.h, "h")});
            files.push_back({"asymptotic.csv", to_csv(t, g, "g")});
            plots.push_back({"asymptotic.csv", false, "asymptotic"});
            json entry;
            entry["h"] = c.dt;
            entry["mean_hazard"] = mean_hazard(p);
            entry["warnings"] = hz.warnings;
            const auto edges = histogram_edges(c.t_max, c.bin_width);
            const auto binned = bin_average(p, edges);
            curve cv = from_points("asymptotic", std::move(t), std::move(g));
            entry["mass"] = total_mass(cv);
            entry["mode"] = mode_location(cv);
            cv.lambda_hat = fit_histogram("asymptotic", edges, binned, entry);
            entry["runtime_ms"] = elapsed_ms(start);
            for (const auto& w : hz.warnings) say("warning: " + w);
            methods["asymptotic"] = std::move(entry);
            result.curves.push_back(std::move(cv));
            break;
        }
        }
    }

    if (result.curves.size() >= 2) result.report = compare(result.curves);

    std::ostringstream report;
    report << "experiment: " << process_name(c.process) << " process, " << b.name() << " boundary\n";
    if (result.report) write_report(report, *result.report);
    for (const auto& f : fits) {
        std::ostringstream os;
        write_fit_report(os, f.fit, f.periodicity);
        files.push_back({"fit_" + f.label + ".txt", os.str()});
        files.push_back({"fit_" + f.label + "_z.csv", to_csv(f.fit.t, f.fit.z, "z")});
        char buf[256];
        std::snprintf(buf, sizeof buf,
                      "\nfit %s: lambda_hat = %.6g on [%g, %g], rms residual %.3g\n"
                      "periodicity of Z at lag %g: corr = %.3f -> %s\n",
                      f.label.c_str(), f.fit.lambda_hat, f.fit.t_a, f.fit.t_b, f.fit.rms_residual,
                      c.period, f.periodicity.correlation, f.periodicity.pass ? "pass" : "fail");
        report << buf;
    }
    files.push_back({"report.txt", report.str()});

    json summary;
    summary["config"] = config_echo(c);
    summary["methods"] = methods;
    json pairs = json::array();
    if (result.report) {
        for (const auto& p : result.report->pairs) {
            json entry{{"a", p.a}, {"b", p.b}, {"l1", p.l1}, {"sup", p.sup}};
            if (p.ks) entry["ks"] = *p.ks;
            pairs.push_back(std::move(entry));
        }
    }
    summary["comparisons"] = pairs;
    result.summary_json = summary.dump(2) + "\n";
    files.push_back({"summary.json", result.summary_json});

    // Paths for the dump are regenerated from the same counters, so they are
    // the first dump_paths paths of the mc run.
    std::optional<sample_path_batch> dump;
    std::optional<covariance_model> dump_model;
    if (c.dump_paths > 0 && c.has(method::mc)) {
        dump_model = make_covariance(c);
        const auto sampler = make_sampler(c.sampler, *dump_model, grid);
        dump = generate_batch(*sampler, c.dump_paths, c.seed, fixed_start{c.x0}, c.workers);
    }

    const std::filesystem::path dir = c.out_dir;
    std::filesystem::create_directories(dir);
    for (const auto& f : files) {
        write_file_atomic(dir / f.name, f.content);
        result.written.push_back(dir / f.name);
    }
    if (dump) {
        const auto tmp = dir / "paths.bin.tmp";
        write_batch(tmp, *dump, *dump_model);
        std::filesystem::rename(tmp, dir / "paths.bin");
        result.written.push_back(dir / "paths.bin");
    }

    std::optional<plot_fit> pf;
    for (const auto& f : fits) {
        if (f.label == "asymptotic") continue;
        pf = plot_fit{f.fit.lambda_hat, f.label, "fit_" + f.label + "_z.csv"};
        break;
    }
    std::ostringstream script;
    emit_plot_script(script, plots, pf, dir);
    write_file_atomic(dir / "plot.gp", script.str());
    result.written.push_back(dir / "plot.gp");
    say("wrote " + std::to_string(result.written.size()) + " files to " + dir.string());
    return result;
}

} // namespace fptlab::cli
