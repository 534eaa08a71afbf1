#include "deltagas/hankel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "deltagas/error.hpp"
#include "deltagas/wiener_hopf.hpp"

namespace deltagas {

namespace {

constexpr double kMinR = 5.0;
constexpr int kTailPanels = 8;

void check_r(double r) {
    if (!(r >= kMinR) || !std::isfinite(r))
        throw Error(ErrorCode::invalid_argument, "hankel: need r >= 5 for a contracting series");
}

Eigen::VectorXd as_vector(const std::vector<double>& v) {
    return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

double weighted_sum(const QuadratureGrid& g, const Eigen::VectorXd& v) {
    double s = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) s += g.weights[i] * v[static_cast<Eigen::Index>(i)];
    return s;
}

}  // namespace

double HalfLineFunction::integral() const {
    double s = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) s += grid.weights[i] * values[i];
    return s;
}

double HalfLineFunction::l1_norm() const {
    double s = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) s += grid.weights[i] * std::abs(values[i]);
    return s;
}

QuadratureGrid half_line_grid(double r, int q) {
    if (!(r > 0.0)) throw Error(ErrorCode::invalid_argument, "half_line_grid: need r > 0");
    const double X = std::max(4.0 * r, 200.0);
    std::vector<double> edges = {0.0, 0.5};
    while (edges.back() < X) edges.push_back(std::min(2.0 * edges.back(), X));
    QuadratureGrid g = composite_gauss(edges, q);

    std::vector<double> tedges = {0.0};
    for (int j = 1; j <= kTailPanels; ++j) tedges.push_back(1.0 - std::ldexp(1.0, -j));
    tedges.push_back(1.0);
    const QuadratureGrid t = composite_gauss(tedges, q);
    for (std::size_t i = 0; i < t.size(); ++i) {
        const double s = 1.0 - t.nodes[i];
        g.nodes.push_back(X / s);
        g.weights.push_back(t.weights[i] * X / (s * s));
    }
    g.domain = {Domain::Kind::semi_infinite, 0.0, INFINITY, 0.0};
    return g;
}

HalfLineFunction g_hat_plus(double r, const QuadratureGrid& grid) {
    if (!(r > 0.0)) throw Error(ErrorCode::invalid_argument, "g_hat_plus: need r > 0");
    HalfLineFunction out{grid, std::vector<double>(grid.size())};
    const LaplaceKernels& kern = LaplaceKernels::shared();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double x = grid.nodes[i];
        out.values[i] = -(kern.S(x) - kern.S(x + r));
    }
    return out;
}

HankelOperator::HankelOperator(double r, const QuadratureGrid& grid) : r_(r), grid_(grid) {
    if (!(r > 0.0)) throw Error(ErrorCode::invalid_argument, "HankelOperator: need r > 0");
    const auto n = static_cast<Eigen::Index>(grid.size());
    const LaplaceKernels& kern = LaplaceKernels::shared();
    matrix_.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i; j < n; ++j) {
            const double kv = kern.k(grid.nodes[i] + grid.nodes[j] + r);
            matrix_(i, j) = kv * grid.weights[j];
            matrix_(j, i) = kv * grid.weights[i];
        }
}

HalfLineFunction HankelOperator::apply(const HalfLineFunction& input) const {
    if (input.grid.nodes != grid_.nodes || input.values.size() != grid_.size())
        throw Error(ErrorCode::grid_mismatch, "HankelOperator::apply: input lives on another grid");
    const Eigen::VectorXd out = matrix_ * as_vector(input.values);
    return {grid_, std::vector<double>(out.data(), out.data() + out.size())};
}

HalfLineFunction apply_hankel(double r, const HalfLineFunction& input) {
    return HankelOperator(r, input.grid).apply(input);
}

NeumannResult neumann_solve(double r, int order, const QuadratureGrid& grid) {
    check_r(r);
    if (order < 0) throw Error(ErrorCode::invalid_argument, "neumann_solve: order must be >= 0");
    NeumannResult res;
    res.order = order;
    res.r = r;
    if (order > 0) {
        const HalfLineFunction g = g_hat_plus(r, grid);
        Eigen::VectorXd term = as_vector(g.values);
        res.per_order.push_back(weighted_sum(grid, term));
        if (order > 1) {
            const HankelOperator K(r, grid);
            for (int j = 1; j < order; ++j) {
                term = -(K.matrix() * term);
                res.per_order.push_back(weighted_sum(grid, term));
            }
        }
        for (std::size_t j = 1; j < res.per_order.size(); ++j)
            if (!(std::abs(res.per_order[j]) < std::abs(res.per_order[j - 1])))
                throw Error(ErrorCode::contraction_failure, "neumann_solve: terms stopped decreasing");
    }
    for (double p : res.per_order) res.h0 += p;
    res.fhat0 = r + 2.0 * res.h0;
    return res;
}

NeumannResult neumann_solve(double r, int order) { return neumann_solve(r, order, half_line_grid(r)); }

NeumannResult hankel_solve_exact(double r, const QuadratureGrid& grid) {
    check_r(r);
    const HalfLineFunction g = g_hat_plus(r, grid);
    const HankelOperator K(r, grid);
    Eigen::MatrixXd A = K.matrix();
    A.diagonal().array() += 1.0;
    const Eigen::VectorXd h = A.partialPivLu().solve(as_vector(g.values));
    NeumannResult res;
    res.order = -1;
    res.r = r;
    res.h0 = weighted_sum(grid, h);
    res.fhat0 = r + 2.0 * res.h0;
    return res;
}

BlockSolution hankel_solve_block(double r, const QuadratureGrid& grid) {
    check_r(r);
    const auto n = static_cast<Eigen::Index>(grid.size());
    const HalfLineFunction g = g_hat_plus(r, grid);
    const LaplaceKernels& kern = LaplaceKernels::shared();
    // Unknowns: h+(x_i), then h-(-x_i). U couples x > 0 to y < 0 with
    // k(x - y + r); V couples x < 0 to y > 0 with k(y - x + r).
    Eigen::MatrixXd A = Eigen::MatrixXd::Identity(2 * n, 2 * n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            const double xp = grid.nodes[i], yp = grid.nodes[j];
            const double xm = -grid.nodes[i], ym = -grid.nodes[j];
            A(i, n + j) = kern.k(xp - ym + r) * grid.weights[j];
            A(n + i, j) = kern.k(yp - xm + r) * grid.weights[j];
        }
    Eigen::VectorXd rhs(2 * n);
    for (Eigen::Index i = 0; i < n; ++i) {
        rhs[i] = g.values[i];
        rhs[n + i] = g.values[i];  // g-(x) = g+(-x)
    }
    const Eigen::VectorXd h = A.partialPivLu().solve(rhs);
    BlockSolution out;
    out.h_plus.assign(h.data(), h.data() + n);
    out.h_minus.assign(h.data() + n, h.data() + 2 * n);
    for (Eigen::Index i = 0; i < n; ++i) {
        out.h0_plus += grid.weights[i] * h[i];
        out.h0_minus += grid.weights[i] * h[n + i];
        out.reflection_gap = std::max(out.reflection_gap, std::abs(h[n + i] - h[i]));
    }
    out.fhat0 = r + out.h0_plus + out.h0_minus;
    return out;
}

double charge_Q_via_hankel(double kappa, int order) {
    if (!(kappa > 0.0) || kappa > 2.0 / kMinR)
        throw Error(ErrorCode::invalid_argument, "charge_Q_via_hankel: need 0 < kappa <= 0.4");
    const double r = 2.0 / kappa;
    return kappa / (2.0 * std::numbers::pi) * neumann_solve(r, order).fhat0;
}

}  // namespace deltagas
