#include "fptlab/cli/config.hpp"

#include "fptlab/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace fptlab::cli {
namespace {

std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(const std::string& v)
{
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(v);
    while (std::getline(is, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

double to_double(const std::string& v, int line, const std::string& key)
{
    double x = 0.0;
    const char* end = v.data() + v.size();
    const auto [p, ec] = std::from_chars(v.data(), end, x);
    if (ec != std::errc{} || p != end || !std::isfinite(x))
        throw config_error("'" + key + "' expects a number, got '" + v + "'", line);
    return x;
}

std::uint64_t to_count(const std::string& v, int line, const std::string& key)
{
    std::uint64_t n = 0;
    const char* end = v.data() + v.size();
    const auto [p, ec] = std::from_chars(v.data(), end, n);
    if (ec == std::errc{} && p == end) return n;
    // Accept 1e5 and the like when the value is a whole number.
    const double x = to_double(v, line, key);
    if (x < 0.0 || x != std::floor(x) || x > 1.8e19)
        throw config_error("'" + key + "' expects a non-negative integer, got '" + v + "'", line);
    return static_cast<std::uint64_t>(x);
}

std::string fmt(double x)
{
    char buf[64];
    const auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, p);
}

template <class E>
struct named {
    const char* name;
    E value;
};

constexpr named<process_family> process_names[] = {
    {"exp_cosine", process_family::exp_cosine},
    {"damped_oscillatory", process_family::damped_oscillatory},
    {"wiener", process_family::wiener},
};
constexpr named<boundary_family> boundary_names[] = {
    {"constant", boundary_family::constant},
    {"periodic", boundary_family::periodic},
    {"daniels_ou", boundary_family::daniels_ou},
    {"polynomial", boundary_family::polynomial},
};
constexpr named<method> method_names[] = {
    {"mc", method::mc},
    {"mc-upcrossing", method::mc_upcrossing},
    {"volterra", method::volterra},
    {"closed-form", method::closed_form},
    {"asymptotic", method::asymptotic},
};
constexpr named<upcrossing_mode> upcrossing_names[] = {
    {"conditional", upcrossing_mode::conditional},
    {"rejection", upcrossing_mode::rejection},
    {"both", upcrossing_mode::both},
};
constexpr named<sampler_kind> sampler_names[] = {
    {"circulant", sampler_kind::circulant},
    {"state_space", sampler_kind::state_space},
};

template <class E, std::size_t N>
E lookup(const named<E> (&table)[N], const std::string& v, int line, const std::string& key)
{
    for (const auto& e : table)
        if (v == e.name) return e.value;
    std::string options;
    for (const auto& e : table) options += std::string(options.empty() ? "" : ", ") + e.name;
    throw config_error("'" + key + "' has unknown value '" + v + "' (expected one of " + options + ")",
                       line);
}

template <class E, std::size_t N>
const char* name_of(const named<E> (&table)[N], E value) noexcept
{
    for (const auto& e : table)
        if (e.value == value) return e.name;
    return "?";
}

// Keys each boundary family accepts besides `family`.
std::set<std::string> boundary_keys(boundary_family f)
{
    switch (f) {
    case boundary_family::constant: return {"s0"};
    case boundary_family::periodic: return {"s0", "amplitude", "period"};
    case boundary_family::daniels_ou: return {"d", "beta"};
    case boundary_family::polynomial: return {"coeffs"};
    }
    return {};
}

struct entry {
    std::string value;
    int line;
};

using section_map = std::map<std::string, std::map<std::string, entry>>;

const std::map<std::string, std::set<std::string>>& known_keys()
{
    static const std::map<std::string, std::set<std::string>> keys{
        {"process", {"family", "alpha", "beta"}},
        {"boundary", {"family", "s0", "amplitude", "period", "d", "beta", "coeffs"}},
        {"grid", {"dt", "t_max"}},
        {"methods", {"run"}},
        {"simulation",
         {"n_paths", "seed", "bin_width", "epsilon", "x0", "sampler", "crossing", "upcrossing", "workers",
          "dump_paths"}},
        {"volterra", {"h"}},
        {"output", {"dir"}},
    };
    return keys;
}

} // namespace

bool experiment_config::has(method m) const
{
    return std::find(methods.begin(), methods.end(), m) != methods.end();
}

double experiment_config::effective_epsilon() const
{
    if (epsilon) return *epsilon;
    return 0.1 * make_boundary(*this)(0.0);
}

const char* method_name(method m) noexcept { return name_of(method_names, m); }
const char* process_name(process_family f) noexcept { return name_of(process_names, f); }
const char* boundary_name(boundary_family f) noexcept { return name_of(boundary_names, f); }

parsed_config parse_config(std::istream& in)
{
    section_map sections;
    std::string current;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto hash = raw.find('#');
        std::string text = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (text.empty()) continue;
        if (text.front() == '[') {
            if (text.back() != ']') throw config_error("unterminated section header", line);
            current = trim(text.substr(1, text.size() - 2));
            if (!known_keys().contains(current))
                throw config_error("unknown section [" + current + "]", line);
            continue;
        }
        const auto eq = text.find('=');
        if (eq == std::string::npos) throw config_error("expected key = value", line);
        if (current.empty()) throw config_error("key outside of any [section]", line);
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));
        if (!known_keys().at(current).contains(key))
            throw config_error("unknown key '" + key + "' in [" + current + "]", line);
        if (value.empty()) throw config_error("empty value for '" + key + "'", line);
        auto& sec = sections[current];
        if (sec.contains(key)) throw config_error("duplicate key '" + key + "'", line);
        sec[key] = {value, line};
    }

    parsed_config out;
    auto& c = out.config;
    auto get = [&](const std::string& sec, const std::string& key) -> const entry* {
        auto s = sections.find(sec);
        if (s == sections.end()) return nullptr;
        auto k = s->second.find(key);
        if (k == s->second.end()) return nullptr;
        out.lines[sec + "." + key] = k->second.line;
        return &k->second;
    };
    auto require = [&](const std::string& sec, const std::string& key) -> const entry& {
        const entry* e = get(sec, key);
        if (e == nullptr) throw config_error("missing required key " + sec + "." + key);
        return *e;
    };
    auto number = [&](const std::string& sec, const std::string& key, double& field) {
        if (const entry* e = get(sec, key)) field = to_double(e->value, e->line, key);
    };

    {
        const entry& fam = require("process", "family");
        c.process = lookup(process_names, fam.value, fam.line, "family");
        number("process", "alpha", c.alpha);
        number("process", "beta", c.beta);
        if (c.process == process_family::wiener) {
            for (const char* k : {"alpha", "beta"})
                if (const entry* e = get("process", k))
                    throw config_error(std::string("'") + k + "' does not apply to wiener", e->line);
        }
        else {
            require("process", "beta");
        }
    }
    {
        const entry& fam = require("boundary", "family");
        c.boundary = lookup(boundary_names, fam.value, fam.line, "family");
        const auto allowed = boundary_keys(c.boundary);
        for (const auto& [key, e] : sections["boundary"]) {
            if (key == "family") continue;
            if (!allowed.contains(key))
                throw config_error("'" + key + "' does not apply to boundary family " + fam.value,
                                   e.line);
        }
        for (const auto& key : allowed) require("boundary", key);
        number("boundary", "s0", c.s0);
        number("boundary", "amplitude", c.amplitude);
        number("boundary", "period", c.period);
        number("boundary", "d", c.d);
        number("boundary", "beta", c.boundary_beta);
        if (const entry* e = get("boundary", "coeffs")) {
            for (const auto& v : split_list(e->value)) c.coeffs.push_back(to_double(v, e->line, "coeffs"));
            if (c.coeffs.empty()) throw config_error("'coeffs' is empty", e->line);
        }
    }
    number("grid", "dt", c.dt);
    number("grid", "t_max", c.t_max);
    {
        const entry& run = require("methods", "run");
        for (const auto& v : split_list(run.value)) {
            const method m = lookup(method_names, v, run.line, "run");
            if (c.has(m)) throw config_error("method '" + v + "' listed twice", run.line);
            c.methods.push_back(m);
        }
    }
    if (const entry* e = get("simulation", "n_paths")) c.n_paths = to_count(e->value, e->line, "n_paths");
    if (const entry* e = get("simulation", "seed")) c.seed = to_count(e->value, e->line, "seed");
    number("simulation", "bin_width", c.bin_width);
    if (const entry* e = get("simulation", "epsilon")) c.epsilon = to_double(e->value, e->line, "epsilon");
    number("simulation", "x0", c.x0);
    if (const entry* e = get("simulation", "sampler"))
        c.sampler = lookup(sampler_names, e->value, e->line, "sampler");
    if (const entry* e = get("simulation", "crossing")) {
        if (e->value == "grid") c.crossing = crossing_rule::grid_interpolated;
        else if (e->value == "bridge") c.crossing = crossing_rule::bridge_corrected;
        else if (e->value != "auto")
            throw config_error("'crossing' expects auto, grid or bridge, got '" + e->value + "'",
                               e->line);
    }
    if (const entry* e = get("simulation", "upcrossing"))
        c.upcrossing = lookup(upcrossing_names, e->value, e->line, "upcrossing");
    if (const entry* e = get("simulation", "workers")) {
        const auto w = to_count(e->value, e->line, "workers");
        if (w > 4096) throw config_error("'workers' is implausibly large", e->line);
        c.workers = static_cast<unsigned>(w);
    }
    if (const entry* e = get("simulation", "dump_paths"))
        c.dump_paths = to_count(e->value, e->line, "dump_paths");
    number("volterra", "h", c.h);
    if (const entry* e = get("output", "dir")) c.out_dir = e->value;
    return out;
}

parsed_config load_config(const std::filesystem::path& file)
{
    std::ifstream in(file);
    if (!in) throw config_error("cannot open config file " + file.string());
    return parse_config(in);
}

std::string serialize(const experiment_config& c)
{
    std::ostringstream os;
    os << "[process]\nfamily = " << process_name(c.process) << '\n';
    if (c.process != process_family::wiener)
        os << "alpha = " << fmt(c.alpha) << "\nbeta = " << fmt(c.beta) << '\n';
    os << "\n[boundary]\nfamily = " << boundary_name(c.boundary) << '\n';
    switch (c.boundary) {
    case boundary_family::constant: os << "s0 = " << fmt(c.s0) << '\n'; break;
    case boundary_family::periodic:
        os << "s0 = " << fmt(c.s0) << "\namplitude = " << fmt(c.amplitude)
           << "\nperiod = " << fmt(c.period) << '\n';
        break;
    case boundary_family::daniels_ou:
        os << "d = " << fmt(c.d) << "\nbeta = " << fmt(c.boundary_beta) << '\n';
        break;
    case boundary_family::polynomial: {
        os << "coeffs = ";
        for (std::size_t i = 0; i < c.coeffs.size(); ++i) os << (i ? ", " : "") << fmt(c.coeffs[i]);
        os << '\n';
        break;
    }
    }
    os << "\n[grid]\ndt = " << fmt(c.dt) << "\nt_max = " << fmt(c.t_max) << '\n';
    os << "\n[methods]\nrun = ";
    for (std::size_t i = 0; i < c.methods.size(); ++i) os << (i ? ", " : "") << method_name(c.methods[i]);
    os << "\n\n[simulation]\nn_paths = " << c.n_paths << "\nseed = " << c.seed
       << "\nbin_width = " << fmt(c.bin_width) << '\n';
    if (c.epsilon) os << "epsilon = " << fmt(*c.epsilon) << '\n';
    os << "x0 = " << fmt(c.x0) << "\nsampler = " << name_of(sampler_names, c.sampler)
       << "\ncrossing = "
       << (!c.crossing ? "auto"
           : *c.crossing == crossing_rule::grid_interpolated ? "grid"
                                                              : "bridge")
       << "\nupcrossing = " << name_of(upcrossing_names, c.upcrossing)
       << "\nworkers = " << c.workers << "\ndump_paths = " << c.dump_paths << '\n';
    os << "\n[volterra]\nh = " << fmt(c.h) << '\n';
    os << "\n[output]\ndir = " << c.out_dir << '\n';
    return os.str();
}

covariance_model make_covariance(const experiment_config& c)
{
    switch (c.process) {
    case process_family::exp_cosine: return covariance_model::exp_cosine(c.alpha, c.beta);
    case process_family::damped_oscillatory:
        return covariance_model::damped_oscillatory(c.alpha, c.beta);
    case process_family::wiener: break;
    }
    throw config_error("the wiener process has no stationary covariance; use volterra only");
}

fptlab::boundary make_boundary(const experiment_config& c)
{
    switch (c.boundary) {
    case boundary_family::constant: return fptlab::boundary::constant(c.s0);
    case boundary_family::periodic: return fptlab::boundary::periodic(c.s0, c.amplitude, c.period);
    case boundary_family::daniels_ou: return fptlab::boundary::daniels_ou(c.d, c.boundary_beta);
    case boundary_family::polynomial: return fptlab::boundary::polynomial(c.coeffs);
    }
    throw config_error("unknown boundary family");
}

void validate(const parsed_config& parsed)
{
    const auto& c = parsed.config;
    auto line_of = [&](const std::string& key) {
        auto it = parsed.lines.find(key);
        return it == parsed.lines.end() ? 0 : it->second;
    };
    auto fail = [&](const std::string& what, const std::string& key) -> void {
        const int line = line_of(key);
        if (line > 0) throw config_error(what, line);
        throw config_error(what);
    };

    if (c.methods.empty()) fail("no methods requested", "methods.run");

    const bool stationary = c.process != process_family::wiener;
    if (stationary) {
        try {
            (void)make_covariance(c);
        }
        catch (const numerical_error& e) {
            fail(std::string("invalid process parameters: ") + e.what(), "process.beta");
        }
    }
    try {
        (void)make_boundary(c);
    }
    catch (const numerical_error& e) {
        fail(std::string("invalid boundary parameters: ") + e.what(), "boundary.family");
    }

    if (!(c.dt > 0.0)) fail("dt must be positive", "grid.dt");
    if (!(c.t_max > c.dt)) fail("t_max must exceed dt", "grid.t_max");
    if (!(c.bin_width >= c.dt)) fail("bin_width must be at least dt", "simulation.bin_width");
    if (!(c.h > 0.0) || c.h > 0.01 * c.t_max) fail("h must lie in (0, 0.01 t_max]", "volterra.h");

    const bool markov_ou = c.process == process_family::exp_cosine && c.alpha <= 1e-6;
    const double s_start = make_boundary(c)(0.0);
    for (method m : c.methods) {
        const std::string name = method_name(m);
        switch (m) {
        case method::mc:
        case method::mc_upcrossing:
            if (!stationary) fail(name + " needs a stationary process, not wiener", "methods.run");
            if (c.n_paths == 0) fail("n_paths must be positive", "simulation.n_paths");
            break;
        case method::volterra:
            if (!markov_ou && stationary)
                fail("volterra needs a Gauss-Markov process: exp_cosine with alpha <= 1e-6, or wiener",
                     "methods.run");
            break;
        case method::closed_form:
            if (!markov_ou)
                fail("closed-form needs exp_cosine with alpha <= 1e-6", "methods.run");
            if (c.boundary != boundary_family::daniels_ou)
                fail("closed-form needs the daniels_ou boundary", "boundary.family");
            if (c.boundary_beta != c.beta)
                fail("closed-form needs boundary.beta equal to process.beta", "boundary.beta");
            if (c.x0 != 0.0) fail("closed-form assumes x0 = 0", "simulation.x0");
            break;
        case method::asymptotic:
            if (c.process != process_family::damped_oscillatory)
                fail("asymptotic needs the damped_oscillatory process", "methods.run");
            if (c.boundary != boundary_family::periodic)
                fail("asymptotic needs the periodic boundary", "boundary.family");
            break;
        }
    }
    if ((c.has(method::mc) || c.has(method::volterra) || c.has(method::closed_form))
        && !(c.x0 < s_start))
        fail("x0 must lie below the boundary at t = 0", "simulation.x0");
    if (c.has(method::mc_upcrossing)) {
        const double eps = c.effective_epsilon();
        if (!(eps > 0.0)) fail("epsilon must be positive", "simulation.epsilon");
    }
}

void validate(const experiment_config& c) { validate(parsed_config{c, {}}); }

} // namespace fptlab::cli
