#include "deltagas/fredholm.hpp"

#include <Eigen/Dense>
#include <boost/math/tools/roots.hpp>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "deltagas/error.hpp"

namespace deltagas {

namespace {

constexpr double pi = std::numbers::pi;
constexpr int kPanelOrder = 16;
constexpr double kNearRho = 3.0;

struct Panel {
    double a, b;
    std::size_t first;  // index of the first node
};

struct Discretization {
    QuadratureGrid grid;
    std::vector<Panel> panels;  // empty for the plain rule
    std::vector<double> ref_x, ref_w, bary;  // reference panel data
};

// Panel edges on [-L, L] graded toward both ends: widths c/4, c/2, c, ...
// capped at L/4.
std::vector<double> graded_edges(double L, double c) {
    const double cap = 0.25 * L;
    std::vector<double> half;  // edges on (0, L], descending from L
    double d = 0.0, w = std::min(0.25 * c, cap);
    while (L - d > 0.5 * w) {
        half.push_back(L - d);
        d += w;
        w = std::min(2.0 * w, cap);
    }
    std::vector<double> edges;
    for (double e : half) edges.push_back(-e);
    edges.push_back(0.0);
    for (auto it = half.rbegin(); it != half.rend(); ++it) edges.push_back(*it);
    return edges;
}

Discretization plain_rule(double L, int n) {
    Discretization d;
    d.grid = gauss_legendre(n, -L, L);
    return d;
}

Discretization graded_rule(double L, double c, int n) {
    const std::vector<double> base = graded_edges(L, c);
    const int p0 = static_cast<int>(base.size()) - 1;
    const int s = std::max(1, (n + p0 * kPanelOrder - 1) / (p0 * kPanelOrder));
    std::vector<double> edges = {base.front()};
    for (int i = 0; i < p0; ++i)
        for (int j = 1; j <= s; ++j) edges.push_back(base[i] + (base[i + 1] - base[i]) * j / s);
    edges.back() = base.back();
    Discretization d;
    d.grid = composite_gauss(edges, kPanelOrder);
    d.grid.domain = {Domain::Kind::finite, -L, L, 0.0};
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
        d.panels.push_back({edges[i], edges[i + 1], i * kPanelOrder});
    const QuadratureGrid ref = gauss_legendre(kPanelOrder, -1.0, 1.0);
    d.ref_x = ref.nodes;
    d.ref_w = ref.weights;
    d.bary.resize(kPanelOrder);
    for (int j = 0; j < kPanelOrder; ++j)
        d.bary[j] = ((j % 2) ? -1.0 : 1.0) * std::sqrt((1.0 - ref.nodes[j] * ref.nodes[j]) * ref.weights[j]);
    return d;
}

// Bernstein ellipse parameter of z relative to [a, b].
double bernstein_rho(std::complex<double> z, double a, double b) {
    const std::complex<double> t = (2.0 * z - (a + b)) / (b - a);
    std::complex<double> s = std::sqrt(t * t - 1.0);
    std::complex<double> r1 = t + s, r2 = t - s;
    return std::max(std::abs(r1), std::abs(r2));
}

// Accumulate int_a^b K(x, y) l_j(y) dy for the Lagrange basis of panel p into row.
void near_weights(const Discretization& d, const Panel& p, double x, double c, double a, double b,
                  std::vector<double>& acc, int depth) {
    const std::complex<double> z(x, c);
    if (depth < 40 && bernstein_rho(z, a, b) < kNearRho) {
        const double m = 0.5 * (a + b);
        near_weights(d, p, x, c, a, m, acc, depth + 1);
        near_weights(d, p, x, c, m, b, acc, depth + 1);
        return;
    }
    const double h = 0.5 * (b - a), mid = 0.5 * (a + b);
    const double ph = 0.5 * (p.b - p.a), pm = 0.5 * (p.a + p.b);
    const int q = kPanelOrder;
    for (int k = 0; k < q; ++k) {
        const double y = mid + h * d.ref_x[k];
        const double kern = (c / pi) / ((x - y) * (x - y) + c * c) * h * d.ref_w[k];
        const double t = (y - pm) / ph;  // reference coordinate
        double denom = 0.0;
        int hit = -1;
        for (int j = 0; j < q; ++j) {
            const double diff = t - d.ref_x[j];
            if (diff == 0.0) { hit = j; break; }
            denom += d.bary[j] / diff;
        }
        if (hit >= 0) {
            acc[hit] += kern;
            continue;
        }
        for (int j = 0; j < q; ++j) acc[j] += kern * (d.bary[j] / (t - d.ref_x[j])) / denom;
    }
}

// Matrix of the discretized operator L (without identity).
Eigen::MatrixXd operator_matrix(const Discretization& d, double c) {
    const std::size_t n = d.grid.size();
    const auto& x = d.grid.nodes;
    const auto& w = d.grid.weights;
    Eigen::MatrixXd K(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            const double dx = x[i] - x[j];
            K(i, j) = (c / pi) / (dx * dx + c * c) * w[j];
        }
    if (d.panels.empty()) return K;
    std::vector<double> acc(kPanelOrder);
    for (std::size_t i = 0; i < n; ++i) {
        const std::complex<double> z(x[i], c);
        for (const Panel& p : d.panels) {
            if (bernstein_rho(z, p.a, p.b) >= kNearRho) continue;
            std::fill(acc.begin(), acc.end(), 0.0);
            near_weights(d, p, x[i], c, p.a, p.b, acc, 0);
            for (int j = 0; j < kPanelOrder; ++j) K(i, p.first + j) = acc[j];
        }
    }
    return K;
}

struct RawSolve {
    QuadratureGrid grid;
    std::vector<double> values;
    double condition;
};

// f + sign * L_c f = rhs on [-L, L] with kernel (c/pi) / ((x-y)^2 + c^2).
RawSolve nystrom(double L, double c, int sign, double rhs, int n, double max_condition) {
    const Discretization d = (c / L >= kGradedThreshold) ? plain_rule(L, n) : graded_rule(L, c, n);
    const std::size_t m = d.grid.size();
    Eigen::MatrixXd A = operator_matrix(d, c) * static_cast<double>(sign);
    A.diagonal().array() += 1.0;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
    const double rc = lu.rcond();
    const double cond = rc > 0.0 ? 1.0 / rc : INFINITY;
    if (!(cond <= max_condition))
        throw Error(ErrorCode::singular_system,
                    "Nystrom matrix condition estimate " + std::to_string(cond) + " above limit");
    Eigen::VectorXd f = lu.solve(Eigen::VectorXd::Constant(m, rhs));
    RawSolve out{d.grid, std::vector<double>(f.data(), f.data() + m), cond};
    return out;
}

NystromSolution solve_once(Statistics stat, double kappa, int n, double max_condition) {
    const int sign = stat == Statistics::Fermi ? 1 : -1;
    RawSolve raw = nystrom(1.0, kappa, sign, 1.0, n, max_condition);
    NystromSolution sol;
    sol.stat = stat;
    sol.grid = std::move(raw.grid);
    sol.values = std::move(raw.values);
    sol.condition = raw.condition;
    for (std::size_t i = 0; i < sol.grid.size(); ++i) {
        const double x = sol.grid.nodes[i], wf = sol.grid.weights[i] * sol.values[i];
        sol.m0 += wf;
        sol.m2 += x * x * wf;
    }
    sol.params.kappa = kappa;
    sol.params.r = 2.0 / kappa;
    sol.params.gamma = gamma_from_solution(sol);
    return sol;
}

}  // namespace

const char* to_string(Statistics stat) { return stat == Statistics::Fermi ? "fermi" : "bose"; }

NystromSolution solve_love(Statistics stat, double kappa, int n, const SolveOptions& options) {
    if (!(kappa > 0.0) || !std::isfinite(kappa))
        throw Error(ErrorCode::invalid_argument, "solve_love: need kappa > 0");
    if (n < 8) throw Error(ErrorCode::invalid_argument, "solve_love: need n >= 8");
    NystromSolution sol = solve_once(stat, kappa, n, options.max_condition);
    if (options.check_convergence) {
        const NystromSolution fine = solve_once(stat, kappa, 2 * n, options.max_condition);
        const double diff = std::abs(fine.m0 - sol.m0);
        if (diff > options.tolerance * std::abs(fine.m0))
            throw Error(ErrorCode::not_converged, "solve_love: m0 changed by " + std::to_string(diff) +
                                                      " when n doubled; increase n");
    }
    return sol;
}

double charge_Q(const NystromSolution& sol) {
    if (sol.stat != Statistics::Fermi) throw Error(ErrorCode::wrong_statistics, "charge_Q needs Fermi");
    return sol.m0 / pi;
}

double gamma_from_solution(const NystromSolution& sol) {
    const double kappa = sol.params.kappa;
    return sol.stat == Statistics::Fermi ? pi * kappa / (2.0 * sol.m0) : 2.0 * pi * kappa / sol.m0;
}

double energy(const NystromSolution& sol) {
    const double m0 = sol.m0;
    return sol.stat == Statistics::Fermi ? pi * pi * sol.m2 / (4.0 * m0 * m0 * m0)
                                         : 4.0 * pi * pi * sol.m2 / (m0 * m0 * m0);
}

double energy_total(const NystromSolution& sol) {
    if (sol.stat != Statistics::Fermi) throw Error(ErrorCode::wrong_statistics, "energy_total needs Fermi");
    const double g = gamma_from_solution(sol);
    return -0.25 * g * g + energy(sol);
}

NystromSolution solve_for_gamma(Statistics stat, double gamma, int n, const SolveOptions& options) {
    if (!(gamma > 0.0) || !std::isfinite(gamma))
        throw Error(ErrorCode::invalid_argument, "solve_for_gamma: need gamma > 0");
    SolveOptions inner = options;
    inner.check_convergence = false;
    auto g_of = [&](double kappa) { return gamma_from_solution(solve_love(stat, kappa, n, inner)); };

    // leading-order guesses: Fermi gamma ~ pi kappa / 2 (weak) .. pi kappa / 4 (strong), Bose gamma ~ pi kappa
    const double guess = stat == Statistics::Fermi ? 2.0 * gamma / pi : gamma / pi;
    double lo = 0.5 * guess, hi = 2.0 * guess;
    double glo, ghi;
    try {
        glo = g_of(lo);
        ghi = g_of(hi);
        for (int it = 0; it < 60 && glo > gamma; ++it) { hi = lo; ghi = glo; lo *= 0.5; glo = g_of(lo); }
        for (int it = 0; it < 60 && ghi < gamma; ++it) { lo = hi; glo = ghi; hi *= 2.0; ghi = g_of(hi); }
    } catch (const Error& e) {
        throw Error(ErrorCode::bracket_failure, std::string("solve_for_gamma: ") + e.what());
    }
    if (!(glo <= gamma && gamma <= ghi) || !(glo < ghi))
        throw Error(ErrorCode::bracket_failure, "solve_for_gamma: could not bracket gamma");
    // monotonicity spot check at the bracket midpoint
    const double mid = 0.5 * (lo + hi);
    const double gmid = g_of(mid);
    if (!(glo <= gmid && gmid <= ghi))
        throw Error(ErrorCode::bracket_failure, "solve_for_gamma: gamma(kappa) not monotone on bracket");

    boost::uintmax_t iters = 200;
    auto res = boost::math::tools::toms748_solve(
        [&](double k) { return g_of(k) - gamma; }, lo, hi, glo - gamma, ghi - gamma,
        boost::math::tools::eps_tolerance<double>(44), iters);
    const double kappa = 0.5 * (res.first + res.second);
    NystromSolution sol = solve_love(stat, kappa, n, options);
    if (!(std::abs(gamma_from_solution(sol) - gamma) <= 1e-10 * gamma))
        throw Error(ErrorCode::not_converged, "solve_for_gamma: root not resolved to 1e-10");
    return sol;
}

RescaledSolution solve_rescaled(double r, int n) {
    if (!(r > 0.0)) throw Error(ErrorCode::invalid_argument, "solve_rescaled: need r > 0");
    if (n < 8) throw Error(ErrorCode::invalid_argument, "solve_rescaled: need n >= 8");
    RawSolve raw = nystrom(0.5 * r, 1.0, 1, 2.0, n, SolveOptions{}.max_condition);
    RescaledSolution out;
    out.r = r;
    out.grid = std::move(raw.grid);
    out.values = std::move(raw.values);
    for (std::size_t i = 0; i < out.grid.size(); ++i) out.integral += out.grid.weights[i] * out.values[i];
    return out;
}

}  // namespace deltagas
