#include "deltagas/verification.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

#include "deltagas/error.hpp"
#include "deltagas/fredholm.hpp"
#include "deltagas/hankel.hpp"
#include "deltagas/parallel.hpp"
#include "deltagas/wiener_hopf.hpp"

namespace deltagas {

namespace {

constexpr double pi = std::numbers::pi;
constexpr int kSolveN = 800;

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

std::vector<double> residuals_of(const std::vector<ReportRow>& rows) {
    std::vector<double> out;
    for (const auto& r : rows) out.push_back(r.residual);
    return out;
}

std::vector<double> xs_of(const std::vector<ReportRow>& rows) {
    std::vector<double> out;
    for (const auto& r : rows) out.push_back(r.x);
    return out;
}

}  // namespace

SuiteReport verify_strong_coupling() {
    SuiteReport rep;
    rep.suite = "strong";
    const auto fermi = solve_love(Statistics::Fermi, 100.0, 400);
    const auto bose = solve_love(Statistics::Bose, 100.0, 400);
    const double lf = pi * pi / 48.0, lb = pi * pi / 3.0;
    rep.rows.push_back({"epsilon_F", 100.0, energy(fermi), lf, energy(fermi) - lf});
    rep.rows.push_back({"epsilon_B", 100.0, energy(bose), lb, energy(bose) - lb});
    const double ef = std::abs(rep.rows[0].residual) / lf, eb = std::abs(rep.rows[1].residual) / lb;
    rep.pass = ef <= 0.02 && eb <= 0.02;
    rep.summary = "relative deviation fermi " + fmt(ef) + ", bose " + fmt(eb) + " (limit 0.02)";
    return rep;
}

SuiteReport verify_charge() {
    SuiteReport rep;
    rep.suite = "charge";
    const std::vector<double> kappas = {0.1, 0.05, 0.02, 0.01};
    rep.rows = parallel_map(kappas, [](double k) {
        const double q = charge_Q(solve_love(Statistics::Fermi, k, kSolveN));
        return ReportRow{"Q", k, q, q_series(k), q - q_series(k)};
    });
    rep.fit = fit_order(xs_of(rep.rows), residuals_of(rep.rows));
    const double last = std::abs(rep.rows.back().residual);
    rep.pass = rep.fit->slope >= 1.6 && last < 5e-5;
    rep.summary = "slope " + fmt(rep.fit->slope) + " (need >= 1.6), |residual| at kappa=0.01 " + fmt(last) +
                  " (need < 5e-5)";
    return rep;
}

SuiteReport verify_energy() {
    SuiteReport rep;
    rep.suite = "energy";
    const std::vector<double> gammas = {0.2, 0.1, 0.05, 0.02};
    rep.rows = parallel_map(gammas, [](double g) {
        const double e = energy(solve_for_gamma(Statistics::Fermi, g, kSolveN));
        return ReportRow{"epsilon_F", g, e, ef_series(g), e - ef_series(g)};
    });
    rep.fit = fit_order(xs_of(rep.rows), residuals_of(rep.rows));

    // gamma -> 0 limit of epsilon_F + gamma/2 by least squares on {1, gamma^2, gamma^3}
    const auto m = static_cast<Eigen::Index>(gammas.size());
    Eigen::MatrixXd A(m, 3);
    Eigen::VectorXd b(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        const double g = gammas[i];
        A(i, 0) = 1.0;
        A(i, 1) = g * g;
        A(i, 2) = g * g * g;
        b[i] = rep.rows[i].numeric + 0.5 * g;
    }
    const double limit = A.colPivHouseholderQr().solve(b)[0];
    const double target = pi * pi / 12.0;
    rep.rows.push_back({"epsilon_F_limit", 0.0, limit, target, limit - target});
    rep.pass = rep.fit->slope >= 1.7 && std::abs(limit - target) <= 1e-6;
    rep.summary = "slope " + fmt(rep.fit->slope) + " (need >= 1.7), extrapolated limit off by " +
                  fmt(limit - target) + " (need <= 1e-6)";
    return rep;
}

SuiteReport verify_fint() {
    SuiteReport rep;
    rep.suite = "fint";
    const std::vector<double> rs = {10.0, 20.0, 40.0, 80.0};
    rep.rows = parallel_map(rs, [](double r) {
        const double v = r * solve_love(Statistics::Fermi, 2.0 / r, kSolveN).m0;
        return ReportRow{"int_f", r, v, fint_series(r), v - fint_series(r)};
    });
    rep.fit = fit_order(rs, residuals_of(rep.rows));
    rep.pass = rep.fit->slope <= -0.7;
    rep.summary = "slope in r " + fmt(rep.fit->slope) + " (need <= -0.7)";
    return rep;
}

SuiteReport verify_factorization() {
    SuiteReport rep;
    rep.suite = "factor";
    double worst = 0.0, worst_xi = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double xi = -20.0 + 40.0 * i / 999.0;
        const Complex p = factor(HalfPlane::upper, xi).value * factor(HalfPlane::lower, xi).value;
        const double d = std::abs(p - symbol(xi));
        if (d > worst) { worst = d; worst_xi = xi; }
    }
    rep.rows.push_back({"max_product_residual", worst_xi, worst, 0.0, worst});
    const double up0 = std::abs(factor(HalfPlane::upper, 0.0).value - 1.0);
    const double lo0 = std::abs(factor(HalfPlane::lower, 0.0).value - 1.0);
    const double up_small = std::abs(factor(HalfPlane::upper, Complex(1e-12, 0.0)).value - 1.0);
    rep.rows.push_back({"sigma_plus_at_0", 0.0, factor(HalfPlane::upper, 0.0).value.real(), 1.0, up0});
    rep.rows.push_back({"sigma_minus_at_0", 0.0, factor(HalfPlane::lower, 0.0).value.real(), 1.0, lo0});
    rep.rows.push_back({"sigma_plus_near_0", 1e-12, 1.0 + up_small, 1.0, up_small});
    rep.pass = worst <= 1e-10 && up0 <= 1e-12 && lo0 <= 1e-12 && up_small <= 1e-10;
    rep.summary = "max |s+ s- - s| " + fmt(worst) + " (need <= 1e-10); factors at 0 equal 1";
    return rep;
}

SuiteReport verify_kernel_decay() {
    SuiteReport rep;
    rep.suite = "kernel";
    double lo = INFINITY, hi = 0.0;
    for (int i = 0; i <= 45; ++i) {
        const double x = 5.0 + i;
        const double v = x * x * std::abs(hankel_kernel_k(x));
        lo = std::min(lo, v);
        hi = std::max(hi, v);
        if (i % 5 == 0) rep.rows.push_back({"x2_abs_k", x, v, 1.0 / (2.0 * pi), v - 1.0 / (2.0 * pi)});
    }
    const std::vector<double> rs = {10.0, 20.0, 40.0, 80.0};
    std::vector<double> norms;
    for (double r : rs) {
        const QuadratureGrid g = half_line_grid(r);
        const double v = g.integrate([r](double x) { return std::abs(hankel_kernel_k(x + r)); });
        norms.push_back(v);
        rep.rows.push_back({"int_abs_k_shifted", r, v, 1.0 / (2.0 * pi * r), v - 1.0 / (2.0 * pi * r)});
    }
    bool halves = true;
    std::string ratios;
    for (std::size_t i = 1; i < norms.size(); ++i) {
        const double q = norms[i - 1] / norms[i];
        halves = halves && q >= 1.5 && q <= 2.5;
        ratios += (i > 1 ? ", " : "") + fmt(q);
    }
    rep.pass = hi / lo < 3.0 && halves;
    rep.summary = "x^2|k| spread " + fmt(hi / lo) + " (need < 3); norm ratios " + ratios + " (need 2 +- 25%)";
    return rep;
}

SuiteReport verify_dual_route() {
    SuiteReport rep;
    rep.suite = "hankel";
    const double kappa = 0.1;
    const double qf = charge_Q(solve_love(Statistics::Fermi, kappa, kSolveN));
    const std::vector<int> orders = {1, 2, 3};
    const std::vector<double> qh = parallel_map(orders, [kappa](int k) { return charge_Q_via_hankel(kappa, k); });
    std::vector<double> rel;
    for (std::size_t i = 0; i < orders.size(); ++i) {
        rel.push_back(std::abs(qh[i] - qf) / qf);
        rep.rows.push_back({"Q_order_" + std::to_string(orders[i]), kappa, qh[i], qf, qh[i] - qf});
    }
    const bool monotone = rel[0] > rel[1] && rel[1] > rel[2];
    rep.pass = rel[2] <= 5e-3 && monotone;
    rep.summary = "relative gap by order " + fmt(rel[0]) + ", " + fmt(rel[1]) + ", " + fmt(rel[2]) +
                  (monotone ? " (decreasing)" : " (NOT decreasing)") + "; need order 3 <= 5e-3";
    return rep;
}

SuiteReport verify_gplus() {
    SuiteReport rep;
    rep.suite = "gplus";
    const std::vector<double> rs = {20.0, 50.0, 100.0};
    rep.rows = parallel_map(rs, [](double r) {
        const double v = g_hat_plus(r, half_line_grid(r)).integral();
        const double s = gplus_coeffs(r)[0];
        return ReportRow{"G_plus_0", r, v, s, v - s};
    });
    rep.fit = fit_order(rs, residuals_of(rep.rows));
    const bool positive = std::all_of(rep.rows.begin(), rep.rows.end(), [](const ReportRow& r) { return r.numeric > 0; });
    rep.pass = rep.fit->slope <= -0.7 && positive;
    rep.summary = "slope in r " + fmt(rep.fit->slope) + " (need <= -0.7)";
    return rep;
}

SuiteReport verify_bose() {
    SuiteReport rep;
    rep.suite = "bose";
    const std::vector<double> gammas = {0.5, 0.25, 0.1};
    rep.rows = parallel_map(gammas, [](double g) {
        const double e = energy(solve_for_gamma(Statistics::Bose, g, kSolveN));
        return ReportRow{"epsilon_B", g, e, eb_series(g), e - eb_series(g)};
    });
    double worst = 0.0;
    for (const auto& r : rep.rows) worst = std::max(worst, std::abs(r.residual) / (r.x * r.x));
    rep.pass = worst <= 1.0;
    rep.summary = "max |residual|/gamma^2 " + fmt(worst) + " (need bounded, <= 1)";
    return rep;
}

SuiteReport verify_properties() {
    SuiteReport rep;
    rep.suite = "properties";
    auto mirror_gap = [](const NystromSolution& s) {
        double d = 0.0;
        const std::size_t n = s.values.size();
        for (std::size_t i = 0; i < n; ++i) d = std::max(d, std::abs(s.values[i] - s.values[n - 1 - i]));
        return d;
    };
    double sym = 0.0;
    for (auto [stat, k] : {std::pair{Statistics::Fermi, 0.1}, {Statistics::Fermi, 0.01}, {Statistics::Bose, 1.0}})
        sym = std::max(sym, mirror_gap(solve_love(stat, k, 400)));
    rep.rows.push_back({"symmetry_gap", 0.0, sym, 0.0, sym});

    double fmin = INFINITY, fmax = -INFINITY;
    for (double k : {1e-3, 1e-2, 0.1, 1.0, 10.0, 100.0, 1e3}) {
        const auto s = solve_love(Statistics::Fermi, k, 400);
        for (double v : s.values) { fmin = std::min(fmin, v); fmax = std::max(fmax, v); }
    }
    rep.rows.push_back({"fermi_min_f", 0.0, fmin, 0.0, fmin});
    rep.rows.push_back({"fermi_max_f", 0.0, fmax, 1.0, fmax - 1.0});

    std::vector<double> m0;
    for (int n : {8, 16, 32}) m0.push_back(solve_love(Statistics::Fermi, 0.5, n).m0);
    const double d1 = std::abs(m0[1] - m0[0]), d2 = std::abs(m0[2] - m0[1]);
    const double factor = d1 / d2;
    rep.rows.push_back({"gauss_doubling_factor", 0.5, factor, 4.0, factor - 4.0});

    const double r = 20.0;
    const QuadratureGrid g = half_line_grid(r);
    const auto block = hankel_solve_block(r, g);
    const auto reduced = hankel_solve_exact(r, g);
    const double eq = std::max(std::abs(block.fhat0 - reduced.fhat0), block.reflection_gap);
    rep.rows.push_back({"block_vs_reduced", r, block.fhat0, reduced.fhat0, eq});

    rep.pass = sym <= 1e-10 && fmin > 0.0 && fmax < 1.0 && factor >= 4.0 && eq <= 1e-10;
    rep.summary = "symmetry " + fmt(sym) + ", f in [" + fmt(fmin) + ", " + fmt(fmax) + "], doubling factor " +
                  fmt(factor) + ", block vs reduced " + fmt(eq);
    return rep;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"strong", "charge", "energy", "fint", "factor",
                                                   "kernel", "hankel", "gplus", "bose", "properties"};
    return names;
}

SuiteReport run_suite(const std::string& name) {
    static const std::map<std::string, std::function<SuiteReport()>> table = {
        {"strong", verify_strong_coupling}, {"charge", verify_charge},       {"energy", verify_energy},
        {"fint", verify_fint},              {"factor", verify_factorization}, {"kernel", verify_kernel_decay},
        {"hankel", verify_dual_route},      {"gplus", verify_gplus},          {"bose", verify_bose},
        {"properties", verify_properties}};
    auto it = table.find(name);
    if (it == table.end()) throw Error(ErrorCode::invalid_argument, "unknown suite '" + name + "'");
    return it->second();
}

}  // namespace deltagas
