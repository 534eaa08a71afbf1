#include "deltagas/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "deltagas/error.hpp"

namespace deltagas {

namespace {
constexpr double pi = std::numbers::pi;
}

double AsymptoticSeries::evaluate(double v, std::size_t count) const {
    const double lv = std::log(v);
    double s = 0.0;
    const std::size_t n = std::min(count, terms.size());
    for (std::size_t i = 0; i < n; ++i) s += terms[i].c * std::pow(v, terms[i].p) * std::pow(lv, terms[i].m);
    return s;
}

AsymptoticSeries AsymptoticSeries::truncated(std::size_t count) const {
    AsymptoticSeries out = *this;
    if (count < out.terms.size()) out.terms.resize(count);
    return out;
}

void AsymptoticSeries::sort_terms() {
    const bool to_zero = direction == SeriesDirection::to_zero;
    std::stable_sort(terms.begin(), terms.end(), [to_zero](const SeriesTerm& a, const SeriesTerm& b) {
        if (a.p != b.p) return to_zero ? a.p < b.p : a.p > b.p;
        return a.m > b.m;
    });
}

AsymptoticSeries charge_series() {
    // 1/pi + (kappa/2pi^2) log(1/kappa) + (kappa/2pi^2)(log pi + 1)
    const double c = 1.0 / (2.0 * pi * pi);
    return {{{0.0, 0, 1.0 / pi}, {1.0, 1, -c}, {1.0, 0, c * (std::log(pi) + 1.0)}},
            SeriesVariable::kappa, SeriesDirection::to_zero};
}

AsymptoticSeries fermi_energy_series() {
    return {{{0.0, 0, pi * pi / 12.0}, {1.0, 0, -0.5}}, SeriesVariable::gamma, SeriesDirection::to_zero};
}

AsymptoticSeries bose_energy_series() {
    return {{{1.0, 0, 1.0}, {1.5, 0, -4.0 / (3.0 * pi)}, {2.0, 0, 1.0 / 6.0 - 1.0 / (pi * pi)}},
            SeriesVariable::gamma, SeriesDirection::to_zero};
}

AsymptoticSeries fint_expansion() {
    return {{{1.0, 0, 1.0}, {0.0, 1, 1.0 / pi}, {0.0, 0, (std::log(pi / 2.0) + 1.0) / pi}},
            SeriesVariable::r, SeriesDirection::to_infinity};
}

double q_series(double kappa) { return charge_series().evaluate(kappa); }
double ef_series(double gamma) { return fermi_energy_series().evaluate(gamma); }
double eb_series(double gamma) { return bose_energy_series().evaluate(gamma); }
double fint_series(double r) { return fint_expansion().evaluate(r); }

std::array<double, 3> gplus_coeffs(double r) {
    const double lr = std::log(r);
    const double eg = std::numbers::egamma;
    return {(lr + std::log(pi / 2.0) + 1.0) / (2.0 * pi),
            -r * (lr + eg - 1.0) / (2.0 * pi),
            -r * r * (lr + eg - 1.5) / (4.0 * pi)};
}

double xi2_coefficient_series(double r) {
    return -r * r * r / 24.0 - 2.0 * (r * r / (16.0 * pi)) * (std::log(r) + std::log(pi / 2.0) - 1.0);
}

double ef_reconstruction(double r) {
    const double f = fint_series(r);
    return pi * pi * (-2.0) * xi2_coefficient_series(r) / (f * f * f);
}

OrderFit fit_order(const std::vector<double>& xs, const std::vector<double>& residuals) {
    if (xs.size() != residuals.size())
        throw Error(ErrorCode::invalid_argument, "fit_order: size mismatch");
    if (xs.size() < 3) throw Error(ErrorCode::invalid_argument, "fit_order: need at least 3 points");
    const std::size_t n = xs.size();
    std::vector<double> lx(n), ly(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(xs[i] > 0.0)) throw Error(ErrorCode::invalid_argument, "fit_order: x must be positive");
        const double a = std::abs(residuals[i]);
        if (!(a > 0.0) || !std::isfinite(a))
            throw Error(ErrorCode::degenerate_fit, "fit_order: zero or non-finite residual");
        lx[i] = std::log(xs[i]);
        ly[i] = std::log(a);
    }
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) { mx += lx[i]; my += ly[i]; }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    if (!(sxx > 0.0)) throw Error(ErrorCode::degenerate_fit, "fit_order: all x equal");
    OrderFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double sse = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double e = ly[i] - fit.intercept - fit.slope * lx[i];
        sse += e * e;
    }
    fit.stderr_slope = n > 2 ? std::sqrt(sse / (n - 2) / sxx) : 0.0;
    return fit;
}

}  // namespace deltagas
