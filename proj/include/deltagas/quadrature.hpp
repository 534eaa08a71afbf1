#pragma once

#include <functional>
#include <vector>

namespace deltagas {

struct Domain {
    enum class Kind { finite, semi_infinite };
    Kind kind = Kind::finite;
    double a = 0.0;
    double b = 0.0;      // truncation point for semi-infinite rules
    double decay = 0.0;  // only meaningful for semi-infinite rules
};

struct QuadratureGrid {
    std::vector<double> nodes;
    std::vector<double> weights;
    Domain domain;

    std::size_t size() const { return nodes.size(); }

    template <class F>
    double integrate(F&& f) const {
        double s = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
        return s;
    }
};

QuadratureGrid gauss_legendre(int n, double a, double b);

// Gauss-Legendre with q nodes on every panel [edges[i], edges[i+1]].
QuadratureGrid composite_gauss(const std::vector<double>& edges, int q);

// Composite rule on [0, y_max] graded geometrically toward 0 on the scale
// 1/decay. n is a total node budget (at least 8 nodes per panel). Pole
// positions, when given, become panel breakpoints at p, p +- radius and
// p +- radius/2 so that pv_rule can excise windows of either size.
QuadratureGrid laplace_grid(double decay, int n, double y_max,
                            const std::vector<double>& poles = {}, double radius = 0.5);

// A grid where every excision window [p - radius, p + radius] carries nodes
// p +- t_i with equal weights, so c/(y - p) integrates to exactly zero.
// pole_offset holds y - p inside windows and NaN elsewhere; callers with an
// explicit pole factor use it to evaluate near the pole without cancellation.
struct PvRule {
    QuadratureGrid grid;
    std::vector<double> pole_offset;
};

PvRule pv_rule(const QuadratureGrid& grid, const std::vector<double>& poles,
               double radius = 0.5, int q = 64);

// Cauchy principal value by pole subtraction on symmetric excision windows.
double pv_integrate(const std::function<double(double)>& integrand, const QuadratureGrid& grid,
                    const std::vector<double>& poles, double radius = 0.5, int q = 64);

// Odd multiples of pi strictly below y_max.
std::vector<double> odd_pi_poles(double y_max);

}  // namespace deltagas
