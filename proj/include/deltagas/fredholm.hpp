#pragma once

#include <vector>

#include "deltagas/quadrature.hpp"

namespace deltagas {

// Bose: f - L f = 1 (Lieb-Liniger). Fermi: f + L f = 1 (Gaudin).
enum class Statistics { Bose, Fermi };

const char* to_string(Statistics stat);

struct CouplingParams {
    double kappa = 0.0;
    double r = 0.0;      // 2 / kappa
    double gamma = 0.0;
};

struct SolveOptions {
    // Re-solve at 2n and compare m0. Off by default because it triples the cost.
    bool check_convergence = false;
    double tolerance = 1e-9;
    double max_condition = 1e12;
};

struct NystromSolution {
    Statistics stat = Statistics::Fermi;
    CouplingParams params;
    QuadratureGrid grid;          // on [-1, 1]
    std::vector<double> values;   // f at grid nodes
    double m0 = 0.0;              // int f
    double m2 = 0.0;              // int x^2 f
    double condition = 0.0;       // 1-norm condition estimate of the Nystrom matrix
};

// Plain Gauss-Legendre for kappa >= kGradedThreshold, otherwise panels graded
// toward the endpoints with near-field product integration. In the graded
// case n is a node budget and the returned grid may be slightly larger.
constexpr double kGradedThreshold = 0.05;

NystromSolution solve_love(Statistics stat, double kappa, int n, const SolveOptions& options = {});

double charge_Q(const NystromSolution& sol);
double gamma_from_solution(const NystromSolution& sol);
// epsilon_F or epsilon_B
double energy(const NystromSolution& sol);
// -gamma^2/4 + epsilon_F, Fermi only
double energy_total(const NystromSolution& sol);

NystromSolution solve_for_gamma(Statistics stat, double gamma, int n, const SolveOptions& options = {});

// f(x)/2 + (1/2pi) int_{-r/2}^{r/2} f(y) / ((x-y)^2 + 1) dy = 1 on [-r/2, r/2].
struct RescaledSolution {
    double r = 0.0;
    QuadratureGrid grid;
    std::vector<double> values;
    double integral = 0.0;   // int f
};

RescaledSolution solve_rescaled(double r, int n);

}  // namespace deltagas
