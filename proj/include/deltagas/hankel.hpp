#pragma once

#include <vector>

#include <Eigen/Dense>

#include "deltagas/quadrature.hpp"

namespace deltagas {

struct HalfLineFunction {
    QuadratureGrid grid;
    std::vector<double> values;

    double integral() const;
    double l1_norm() const;
};

// Gauss panels [0, 1/2], [1/2, 1], [1, 2], ... up to X = max(4r, 200), then
// the tail x = X / (1 - t) with t-panels [0, 1/2], [1/2, 3/4], ..., [1 - 2^-8, 1].
QuadratureGrid half_line_grid(double r, int q = 16);

// Inverse transform of G+ on x > 0: -int_x^{x+r} s1(y) dy.
HalfLineFunction g_hat_plus(double r, const QuadratureGrid& grid);

// (K u)(x) = int_0^inf k(x + y + r) u(y) dy, discretized on one grid.
class HankelOperator {
public:
    HankelOperator(double r, const QuadratureGrid& grid);

    HalfLineFunction apply(const HalfLineFunction& input) const;

    double r() const { return r_; }
    const QuadratureGrid& grid() const { return grid_; }
    const Eigen::MatrixXd& matrix() const { return matrix_; }

private:
    double r_;
    QuadratureGrid grid_;
    Eigen::MatrixXd matrix_;  // k(x_i + x_j + r) w_j
};

HalfLineFunction apply_hankel(double r, const HalfLineFunction& input);

struct NeumannResult {
    int order = 0;
    double r = 0.0;
    double h0 = 0.0;                  // int of the truncated h+
    double fhat0 = 0.0;               // r + 2 h0
    std::vector<double> per_order;    // int of (-K)^j g, j < order
};

// h = sum_{j < order} (-K)^j g. Needs r >= 5.
NeumannResult neumann_solve(double r, int order, const QuadratureGrid& grid);
NeumannResult neumann_solve(double r, int order);

// Dense solve of (I + K) h = g on the same grid, i.e. the untruncated series.
NeumannResult hankel_solve_exact(double r, const QuadratureGrid& grid);

// The coupled pair with h+ on x > 0 and h- on x < 0 carried separately.
struct BlockSolution {
    double h0_plus = 0.0;
    double h0_minus = 0.0;
    double fhat0 = 0.0;               // r + h0_plus + h0_minus
    double reflection_gap = 0.0;      // max_i |h-(-x_i) - h+(x_i)|
    std::vector<double> h_plus;
    std::vector<double> h_minus;      // at -x_i
};

BlockSolution hankel_solve_block(double r, const QuadratureGrid& grid);

// Q = (kappa / 2 pi) fhat0 with r = 2 / kappa. Needs kappa <= 0.4.
double charge_Q_via_hankel(double kappa, int order);

}  // namespace deltagas
