#include "deltagas/wiener_hopf.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "deltagas/error.hpp"
#include "deltagas/quadrature.hpp"

namespace deltagas {

namespace {

constexpr double pi = std::numbers::pi;
const double kLog2Pi = std::log(2.0 * pi);
const double kHalfLogPi = 0.5 * std::log(pi);

}  // namespace

double symbol(double xi) { return 0.5 * (1.0 + std::exp(-std::abs(xi))); }

FactorValue factor(HalfPlane half_plane, Complex xi) {
    if (!std::isfinite(xi.real()) || !std::isfinite(xi.imag()))
        throw Error(ErrorCode::invalid_argument, "factor: non-finite argument");
    if (std::abs(xi.imag()) >= pi) throw Error(ErrorCode::out_of_strip, "factor: need |Im xi| < pi");
    if (half_plane == HalfPlane::upper && xi.imag() < 0.0)
        throw Error(ErrorCode::wrong_half_plane, "factor: sigma_+ needs Im xi >= 0");
    if (half_plane == HalfPlane::lower && xi.imag() > 0.0)
        throw Error(ErrorCode::wrong_half_plane, "factor: sigma_- needs Im xi <= 0");
    if (xi == Complex(0.0, 0.0)) return {1.0, half_plane, xi};

    const Complex I(0.0, 1.0);
    const Complex w = xi / (2.0 * pi * I);
    Complex lv;
    if (half_plane == HalfPlane::upper)
        lv = kHalfLogPi + w * (std::log(-I * xi) - kLog2Pi - 1.0) - log_gamma(0.5 + w);
    else
        lv = kHalfLogPi - w * (std::log(I * xi) - kLog2Pi - 1.0) - log_gamma(0.5 - w);
    return {std::exp(lv), half_plane, xi};
}

double sigma_minus_axis(double y) {
    if (!(y >= 0.0)) throw Error(ErrorCode::invalid_argument, "sigma_minus_axis: need y >= 0");
    if (y == 0.0) return 1.0;
    const double u = y / (2.0 * pi);
    if (u >= 20.0) {
        const double v = 1.0 / u, v2 = v * v;
        const double s = -0.5 * std::numbers::ln2 +
                         v * (1.0 / 24.0 + v2 * (-7.0 / 2880.0 + v2 * (31.0 / 40320.0 - v2 * 127.0 / 215040.0)));
        return std::exp(s);
    }
    return std::exp(kHalfLogPi + u * (std::log(y) - kLog2Pi - 1.0) - log_gamma(Complex(0.5 + u)).real());
}

Complex ExpansionCoefficients::at(int n, int m) const {
    auto it = entries.find({n, m});
    if (it == entries.end()) throw Error(ErrorCode::depth_exceeded, "expansion coefficient not available");
    return it->second;
}

Complex ExpansionCoefficients::evaluate(Complex xi, int order) const {
    if (order > depth) throw Error(ErrorCode::depth_exceeded, "evaluate: order above depth");
    const Complex L = std::log(Complex(0.0, -1.0) * xi);
    Complex sum = 0.0;
    for (const auto& [nm, a] : entries) {
        if (nm.first > order) continue;
        sum += a * std::pow(xi, nm.first) * std::pow(L, nm.second);
    }
    return sum;
}

ExpansionCoefficients expansion_coeffs(int N) {
    if (N < 1) throw Error(ErrorCode::invalid_argument, "expansion_coeffs: need N >= 1");
    if (N > kMaxExpansionDepth) throw Error(ErrorCode::depth_exceeded, "expansion_coeffs: N > 4");

    // With z = -i xi and u = z/(2 pi):
    //   1/sigma_+ = exp(A(u)) exp(-u (log z - c)),  A(u) = lnGamma(1/2 + u) - lnGamma(1/2),
    //   c = log(2 pi) + 1.
    // Taylor coefficients of A from a trapezoid Cauchy integral on |u| = rho.
    constexpr int M = 64;
    constexpr double rho = 0.25;
    const double lg_half = kHalfLogPi;
    std::vector<double> alpha(N + 1, 0.0);
    for (int j = 0; j < M; ++j) {
        const double th = 2.0 * pi * j / M;
        const Complex u = rho * std::polar(1.0, th);
        const Complex A = log_gamma(0.5 + u) - lg_half;
        for (int k = 1; k <= N; ++k) alpha[k] += (A * std::polar(1.0, -k * th)).real();
    }
    for (int k = 1; k <= N; ++k) alpha[k] /= M * std::pow(rho, k);

    // e = Taylor coefficients of exp(A)
    std::vector<double> e(N + 1, 0.0);
    e[0] = 1.0;
    for (int n = 1; n <= N; ++n) {
        double s = 0.0;
        for (int k = 1; k <= n; ++k) s += k * alpha[k] * e[n - k];
        e[n] = s / n;
    }

    const double c = kLog2Pi + 1.0;
    auto binom = [](int k, int m) {
        double b = 1.0;
        for (int i = 1; i <= m; ++i) b = b * (k - m + i) / i;
        return b;
    };
    ExpansionCoefficients out;
    out.depth = N;
    Complex mi_pow = 1.0;  // (-i)^n / (2 pi)^n
    for (int n = 0; n <= N; ++n) {
        for (int m = 0; m <= n; ++m) {
            double b = 0.0;
            double fact = 1.0;
            for (int k = 1; k <= m; ++k) fact *= k;
            for (int k = m; k <= n; ++k) {
                if (k > m) fact *= k;
                b += e[n - k] * ((k % 2) ? -1.0 : 1.0) / fact * binom(k, m) * std::pow(-c, k - m);
            }
            out.entries[{n, m}] = b * mi_pow;
        }
        mi_pow *= Complex(0.0, -1.0) / (2.0 * pi);
    }
    // closed forms for the first two orders
    const Complex I(0.0, 1.0);
    out.entries[{0, 0}] = 1.0;
    out.entries[{1, 1}] = I / (2.0 * pi);
    out.entries[{1, 0}] = I / (2.0 * pi) * (std::numbers::egamma - std::log(pi / 2.0) - 1.0);
    return out;
}

LaplaceKernels::LaplaceKernels(int q, int periods, double y_min) {
    if (q < 2 || periods < 1 || !(y_min > 0.0 && y_min < 1.0))
        throw Error(ErrorCode::invalid_argument, "LaplaceKernels: bad rule parameters");
    constexpr double radius = 0.5;
    y_max_ = 2.0 * pi * periods;
    std::vector<double> edges = {0.0};
    for (double e = y_min; e < 1.0; e *= 2.0) edges.push_back(e);
    double a = 1.0;
    const std::vector<double> poles = odd_pi_poles(y_max_);
    for (double p : poles) {
        const double b = p - radius;
        const int m = std::max(1, static_cast<int>(std::ceil(b - a)));
        for (int j = 0; j < m; ++j) edges.push_back(a + (b - a) * j / m);
        edges.push_back(b);
        edges.push_back(p + radius);
        a = p + radius;
    }
    {
        const double b = y_max_;
        const int m = std::max(1, static_cast<int>(std::ceil(b - a)));
        for (int j = 1; j <= m; ++j) edges.push_back(a + (b - a) * j / m);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    QuadratureGrid base = composite_gauss(edges, q);
    base.domain = {Domain::Kind::semi_infinite, 0.0, y_max_, 0.0};
    const PvRule rule = pv_rule(base, poles, radius, q);

    const std::size_t n = rule.grid.size();
    y_ = rule.grid.nodes;
    wk_.resize(n);
    ws_.resize(n);
    wS_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double y = y_[i];
        const double off = rule.pole_offset[i];
        const double t = std::isnan(off) ? std::tan(0.5 * y) : -1.0 / std::tan(0.5 * off);
        const double sm = sigma_minus_axis(y);
        const double w = rule.grid.weights[i];
        wk_[i] = w * sm * sm * t;
        ws_[i] = w * sm * t;
        wS_[i] = w * sm * t / y;
    }
}

double LaplaceKernels::sum(const std::vector<double>& wg, double x) const {
    if (!(x > 0.0)) throw Error(ErrorCode::invalid_argument, "kernel: need x > 0");
    const double cut = std::min(y_max_, 2.0 * pi * std::ceil(40.0 / (2.0 * pi * x)));
    const std::size_t end = static_cast<std::size_t>(std::upper_bound(y_.begin(), y_.end(), cut) - y_.begin());
    double s = 0.0;
    for (std::size_t i = 0; i < end; ++i) s += wg[i] * std::exp(-x * y_[i]);
    return -s / pi;
}

double LaplaceKernels::k(double x) const { return sum(wk_, x); }
double LaplaceKernels::s1(double x) const { return sum(ws_, x); }
double LaplaceKernels::S(double x) const { return sum(wS_, x); }

const LaplaceKernels& LaplaceKernels::shared() {
    static const LaplaceKernels instance;
    return instance;
}

double hankel_kernel_k(double x) { return LaplaceKernels::shared().k(x); }
double s1_kernel(double x) { return LaplaceKernels::shared().s1(x); }
double s1_tail(double x) { return LaplaceKernels::shared().S(x); }

}  // namespace deltagas
