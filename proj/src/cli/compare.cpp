#include "fptlab/cli/compare.hpp"

#include "fptlab/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace fptlab::cli {

const pair_metrics* comparison_report::find(const std::string& a, const std::string& b) const
{
    for (const auto& p : pairs)
        if ((p.a == a && p.b == b) || (p.a == b && p.b == a)) return &p;
    return nullptr;
}

std::vector<double> common_grid(std::span<const curve> curves)
{
    if (curves.empty()) throw empty_input_error("no curves to compare");
    double begin = -std::numeric_limits<double>::infinity();
    double end = std::numeric_limits<double>::infinity();
    for (const auto& c : curves) {
        begin = std::max(begin, c.support_begin());
        end = std::min(end, c.support_end());
    }
    if (!(end > begin)) throw disjoint_support_error("curves have no common support");
    const double slack = 1e-9 * std::max(1.0, std::abs(end));

    const curve* coarsest = nullptr;
    double widest = 0.0;
    for (const auto& c : curves) {
        if (c.type != curve::kind::histogram) continue;
        const double w = (c.x.back() - c.x.front()) / static_cast<double>(c.y.size());
        if (w > widest) {
            widest = w;
            coarsest = &c;
        }
    }

    std::vector<double> edges;
    if (coarsest != nullptr) {
        for (double e : coarsest->x)
            if (e >= begin - slack && e <= end + slack) edges.push_back(e);
    }
    else {
        for (const auto& c : curves)
            for (std::size_t k = 0; k + 1 < c.x.size(); ++k) widest = std::max(widest, c.x[k + 1] - c.x[k]);
        // spacings carry rounding noise; a bin that falls short by a hair still counts
        const auto n = static_cast<std::size_t>(std::floor((end - begin) / widest + 1e-6));
        for (std::size_t k = 0; k <= n; ++k)
            edges.push_back(std::min(end, begin + static_cast<double>(k) * widest));
    }
    if (edges.size() < 2)
        throw disjoint_support_error("common support is narrower than one bin of the coarsest curve");
    return edges;
}

double ks_statistic(std::vector<double> a, std::vector<double> b)
{
    if (a.empty() || b.empty()) throw empty_input_error("KS needs two non-empty samples");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        const double x = std::min(a[i], b[j]);
        if (std::isinf(x)) break;
        while (i < a.size() && a[i] == x) ++i;
        while (j < b.size() && b[j] == x) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    // Past the last finite value of one sample: the other's ECDF keeps rising.
    while (i < a.size() && !std::isinf(a[i])) {
        ++i;
        d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    while (j < b.size() && !std::isinf(b[j])) {
        ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return d;
}

comparison_report compare(std::span<const curve> curves)
{
    if (curves.size() < 2) throw empty_input_error("compare needs at least two curves");
    comparison_report r;
    r.edges = common_grid(curves);
    std::vector<std::vector<double>> binned;
    for (const auto& c : curves) {
        binned.push_back(rebin(c, r.edges));
        r.summaries.push_back({c.label, mode_location(c), peak_height(c), total_mass(c), c.lambda_hat});
    }
    for (std::size_t i = 0; i < curves.size(); ++i) {
        for (std::size_t j = i + 1; j < curves.size(); ++j) {
            pair_metrics m;
            m.a = curves[i].label;
            m.b = curves[j].label;
            for (std::size_t k = 0; k + 1 < r.edges.size(); ++k) {
                const double diff = std::abs(binned[i][k] - binned[j][k]);
                m.l1 += diff * (r.edges[k + 1] - r.edges[k]);
                m.sup = std::max(m.sup, diff);
            }
            if (!curves[i].samples.empty() && !curves[j].samples.empty())
                m.ks = ks_statistic(curves[i].samples, curves[j].samples);
            r.pairs.push_back(std::move(m));
        }
    }
    return r;
}

void write_report(std::ostream& os, const comparison_report& report)
{
    int curve_w = 5;
    int pair_w = 4;
    for (const auto& s : report.summaries) curve_w = std::max(curve_w, static_cast<int>(s.label.size()));
    for (const auto& p : report.pairs)
        pair_w = std::max(pair_w, static_cast<int>(p.a.size() + p.b.size() + 4));

    char buf[512];
    std::snprintf(buf, sizeof buf, "common grid: %zu bins on [%g, %g]\n\n", report.edges.size() - 1,
                  report.edges.front(), report.edges.back());
    os << buf;
    std::snprintf(buf, sizeof buf, "%-*s %10s  %10s  %10s  %11s\n", curve_w, "curve", "mode", "peak", "mass",
                  "lambda_hat");
    os << buf;
    for (const auto& s : report.summaries) {
        std::snprintf(buf, sizeof buf, "%-*s %10.5g  %10.5g  %10.6g", curve_w, s.label.c_str(), s.mode,
                      s.peak, s.mass);
        os << buf;
        if (s.lambda_hat) {
            std::snprintf(buf, sizeof buf, "  %11.6g", *s.lambda_hat);
            os << buf;
        }
        os << '\n';
    }
    std::snprintf(buf, sizeof buf, "\n%-*s %11s %11s %11s\n", pair_w, "pair", "L1", "sup", "KS");
    os << buf;
    for (const auto& p : report.pairs) {
        const std::string name = p.a + " vs " + p.b;
        std::snprintf(buf, sizeof buf, "%-*s %11.5g %11.5g", pair_w, name.c_str(), p.l1, p.sup);
        os << buf;
        if (p.ks) {
            std::snprintf(buf, sizeof buf, " %11.5g", *p.ks);
            os << buf;
        }
        os << '\n';
    }
}

} // namespace fptlab::cli
