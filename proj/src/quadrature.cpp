#include "deltagas/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "deltagas/error.hpp"

namespace deltagas {

namespace {

// Nodes and weights on [-1, 1], ascending.
void legendre_rule(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int k = 1; k <= n; ++k) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
            }
            dp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-16) break;
        }
        // recompute derivative at the converged node
        double p0 = 1.0, p1 = 0.0;
        for (int k = 1; k <= n; ++k) {
            const double p2 = p1;
            p1 = p0;
            p0 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p2) / k;
        }
        dp = n * (z * p0 - p1) / (z * z - 1.0);
        const double wi = 2.0 / ((1.0 - z * z) * dp * dp);
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = w[n - 1 - i] = wi;
    }
    if (n % 2 == 1) x[n / 2] = 0.0;
}

void append_panel(QuadratureGrid& g, const std::vector<double>& x, const std::vector<double>& w,
                  double a, double b) {
    const double h = 0.5 * (b - a), c = 0.5 * (a + b);
    for (std::size_t i = 0; i < x.size(); ++i) {
        g.nodes.push_back(c + h * x[i]);
        g.weights.push_back(h * w[i]);
    }
}

}  // namespace

QuadratureGrid gauss_legendre(int n, double a, double b) {
    if (n < 1) throw Error(ErrorCode::invalid_argument, "gauss_legendre: n must be >= 1");
    if (!(a < b)) throw Error(ErrorCode::invalid_interval, "gauss_legendre: need a < b");
    std::vector<double> x, w;
    legendre_rule(n, x, w);
    QuadratureGrid g;
    g.domain = {Domain::Kind::finite, a, b, 0.0};
    append_panel(g, x, w, a, b);
    return g;
}

QuadratureGrid composite_gauss(const std::vector<double>& edges, int q) {
    if (q < 1) throw Error(ErrorCode::invalid_argument, "composite_gauss: q must be >= 1");
    if (edges.size() < 2) throw Error(ErrorCode::invalid_interval, "composite_gauss: need two edges");
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (!(edges[i - 1] < edges[i]))
            throw Error(ErrorCode::invalid_interval, "composite_gauss: edges not increasing");
    std::vector<double> x, w;
    legendre_rule(q, x, w);
    QuadratureGrid g;
    g.domain = {Domain::Kind::finite, edges.front(), edges.back(), 0.0};
    g.nodes.reserve(q * (edges.size() - 1));
    g.weights.reserve(q * (edges.size() - 1));
    for (std::size_t i = 1; i < edges.size(); ++i) append_panel(g, x, w, edges[i - 1], edges[i]);
    return g;
}

QuadratureGrid laplace_grid(double decay, int n, double y_max, const std::vector<double>& poles,
                            double radius) {
    if (!(decay > 0.0) || !(y_max > 0.0) || n < 1)
        throw Error(ErrorCode::invalid_argument, "laplace_grid: need decay > 0, y_max > 0, n >= 1");
    const double s = std::min(1.0 / decay, y_max);
    std::vector<double> edges = {0.0};
    for (int k = 20; k >= 1; --k) edges.push_back(s * std::ldexp(1.0, -k));
    for (double e = s; e < y_max; e += s) edges.push_back(e);
    edges.push_back(y_max);
    for (double p : poles) {
        if (!(p - radius > 0.0 && p + radius < y_max)) continue;
        for (double d : {-radius, -0.5 * radius, 0.0, 0.5 * radius, radius}) edges.push_back(p + d);
    }
    std::sort(edges.begin(), edges.end());
    std::vector<double> merged;
    for (double e : edges)
        if (merged.empty() || e - merged.back() > 1e-12 * std::max(1.0, e)) merged.push_back(e);
    if (merged.back() < y_max) merged.back() = y_max;
    const int panels = static_cast<int>(merged.size()) - 1;
    const int q = std::max(8, (n + panels - 1) / panels);
    QuadratureGrid g = composite_gauss(merged, q);
    g.domain = {Domain::Kind::semi_infinite, 0.0, y_max, decay};
    return g;
}

PvRule pv_rule(const QuadratureGrid& grid, const std::vector<double>& poles, double radius, int q) {
    if (!(radius > 0.0)) throw Error(ErrorCode::invalid_argument, "pv_rule: radius must be positive");
    std::vector<double> ps = poles;
    std::sort(ps.begin(), ps.end());
    const double a = grid.domain.a, b = grid.domain.b;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (!(ps[i] - radius > a && ps[i] + radius < b))
            throw Error(ErrorCode::invalid_argument, "pv_rule: pole window not inside the domain");
        if (i > 0 && !(ps[i] - ps[i - 1] > 2.0 * radius))
            throw Error(ErrorCode::poles_too_close, "pv_rule: poles closer than two excision radii");
    }
    for (double y : grid.nodes)
        if (std::binary_search(ps.begin(), ps.end(), y))
            throw Error(ErrorCode::pole_on_node, "pv_rule: grid node coincides with a pole");

    std::vector<double> tx, tw;
    legendre_rule(q, tx, tw);
    struct Entry { double y, w, off; };
    std::vector<Entry> entries;
    entries.reserve(grid.size() + 2 * q * ps.size());
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double y = grid.nodes[i];
        auto it = std::lower_bound(ps.begin(), ps.end(), y - radius);
        if (it != ps.end() && std::abs(*it - y) < radius) continue;
        entries.push_back({y, grid.weights[i], nan});
    }
    for (double p : ps) {
        for (int j = 0; j < q; ++j) {
            const double t = 0.5 * radius * (tx[j] + 1.0);
            const double wt = 0.5 * radius * tw[j];
            entries.push_back({p - t, wt, -t});
            entries.push_back({p + t, wt, t});
        }
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& l, const Entry& r) { return l.y < r.y; });
    PvRule rule;
    rule.grid.domain = grid.domain;
    rule.grid.nodes.reserve(entries.size());
    rule.grid.weights.reserve(entries.size());
    rule.pole_offset.reserve(entries.size());
    for (const auto& e : entries) {
        rule.grid.nodes.push_back(e.y);
        rule.grid.weights.push_back(e.w);
        rule.pole_offset.push_back(e.off);
    }
    return rule;
}

double pv_integrate(const std::function<double(double)>& integrand, const QuadratureGrid& grid,
                    const std::vector<double>& poles, double radius, int q) {
    const PvRule rule = pv_rule(grid, poles, radius, q);
    return rule.grid.integrate(integrand);
}

std::vector<double> odd_pi_poles(double y_max) {
    std::vector<double> out;
    for (int j = 0;; ++j) {
        const double p = (2 * j + 1) * std::numbers::pi;
        if (!(p < y_max)) break;
        out.push_back(p);
    }
    return out;
}

}  // namespace deltagas
