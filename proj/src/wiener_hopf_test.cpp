#include <doctest.h>

#include <cmath>
#include <numbers>

#include "deltagas/asymptotics.hpp"
#include "deltagas/error.hpp"
#include "deltagas/hankel.hpp"
#include "deltagas/special.hpp"
#include "deltagas/wiener_hopf.hpp"

using namespace deltagas;
using std::numbers::pi;

TEST_CASE("symbol values") {
    CHECK(symbol(0.0) == 1.0);
    CHECK(std::abs(symbol(1.0) - 0.68393972058572117) <= 1e-15);
    CHECK(std::abs(symbol(80.0) - 0.5) <= 1e-15);
    CHECK(symbol(-2.3) == symbol(2.3));
}

TEST_CASE("factors at zero and the product identity") {
    CHECK(factor(HalfPlane::upper, 0.0).value == Complex(1.0, 0.0));
    CHECK(factor(HalfPlane::lower, 0.0).value == Complex(1.0, 0.0));
    const Complex p = factor(HalfPlane::upper, 1.0).value * factor(HalfPlane::lower, 1.0).value;
    CHECK(std::abs(p - symbol(1.0)) <= 1e-12);
    double worst = 0.0, conj_gap = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double xi = -20.0 + 40.0 * i / 999.0;
        const Complex sp = factor(HalfPlane::upper, xi).value, sm = factor(HalfPlane::lower, xi).value;
        worst = std::max(worst, std::abs(sp * sm - symbol(xi)));
        conj_gap = std::max(conj_gap, std::abs(sm - std::conj(sp)));
    }
    CHECK(worst <= 1e-10);
    CHECK(conj_gap <= 1e-12);
}

TEST_CASE("sigma_+ off the axis matches the Cauchy projection of log sigma") {
    // exp of the Cauchy integral of log sigma, 50 digits
    const FactorValue v = factor(HalfPlane::upper, Complex(0.7, 0.4));
    CHECK(v.half_plane == HalfPlane::upper);
    CHECK(std::abs(v.value - Complex(0.83930921640810999246, 0.074693287638453745461)) <= 1e-12);
}

TEST_CASE("factor domain checks") {
    try {
        factor(HalfPlane::upper, Complex(0.0, 3.2));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::out_of_strip);
    }
    try {
        factor(HalfPlane::upper, Complex(1.0, -0.1));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::wrong_half_plane);
    }
    CHECK_THROWS_AS(factor(HalfPlane::lower, Complex(1.0, 0.1)), Error);
}

TEST_CASE("axis factor agrees with the strip formula and its large-y form") {
    for (double y : {0.01, 0.5, 2.0, 3.1}) {
        const Complex f = factor(HalfPlane::lower, Complex(0.0, -y)).value;
        CHECK(std::abs(f.imag()) <= 1e-14);
        CHECK(std::abs(sigma_minus_axis(y) - f.real()) <= 1e-14);
    }
    // the large-u series takes over at u = 20; compare against log_gamma just above
    for (double u : {20.0, 23.0, 31.0}) {
        const double y = 2.0 * pi * u;
        const double direct = std::exp(0.5 * std::log(pi) + u * (std::log(y) - std::log(2.0 * pi) - 1.0) -
                                       log_gamma(0.5 + u).real());
        CHECK(std::abs(sigma_minus_axis(y) - direct) <= 1e-12);
    }
    CHECK(std::abs(sigma_minus_axis(1e12) - 1.0 / std::sqrt(2.0)) <= 1e-12);
    CHECK(sigma_minus_axis(0.0) == 1.0);
}

TEST_CASE("expansion coefficients") {
    const ExpansionCoefficients a = expansion_coeffs(4);
    const Complex I(0.0, 1.0);
    CHECK(a.at(0, 0) == Complex(1.0, 0.0));
    CHECK(std::abs(a.at(1, 1) - I / (2.0 * pi)) <= 1e-15);
    CHECK(std::abs(a.at(1, 0) - I / (2.0 * pi) * (std::numbers::egamma - std::log(pi / 2.0) - 1.0)) <= 1e-15);
    // 40-digit references from the Taylor series of exp(lnGamma(1/2 + u) - lnGamma(1/2))
    struct Ref { int n, m; Complex v; };
    const Ref refs[] = {
        {2, 0, {-0.072182730054919302359, 0.0}}, {2, 1, {0.022147975867488003129, 0.0}},
        {2, 2, {-0.01266514795529222143, 0.0}},  {3, 0, {0.0, -0.0021607468889218095779}},
        {3, 1, {0.0, -0.011488238294108324652}}, {3, 2, {0.0, 0.0017624799193953621851}},
        {3, 3, {0.0, -0.00067190696735832269134}}, {4, 0, {0.0036045542236782718589, 0.0}},
        {4, 1, {0.0003438935481423404957, 0.0}},  {4, 2, {0.00091420495596247158059, 0.0}},
        {4, 3, {-0.000093502463757325715669, 0.0}}, {4, 4, {0.000026734328788240456222, 0.0}},
    };
    for (const Ref& r : refs) {
        CAPTURE(r.n);
        CAPTURE(r.m);
        CHECK(std::abs(a.at(r.n, r.m) - r.v) <= 1e-12);
    }
    // closed forms agree with the numerical route
    CHECK(expansion_coeffs(1).depth == 1);
    CHECK_THROWS_AS(expansion_coeffs(5), Error);
    CHECK_THROWS_AS(a.at(5, 0), Error);
}

TEST_CASE("expansion residual on the ray xi = i t shrinks at the expected order") {
    const ExpansionCoefficients a = expansion_coeffs(4);
    for (int N : {1, 2}) {
        std::vector<double> ts, res;
        const int kmax = N == 1 ? 4 : 3;
        for (int k = 1; k <= kmax; ++k) {
            const double t = std::pow(10.0, -k);
            const Complex xi(0.0, t);
            const Complex exact = 1.0 / factor(HalfPlane::upper, xi).value;
            ts.push_back(t);
            res.push_back(std::abs(exact - a.evaluate(xi, N)));
        }
        const OrderFit fit = fit_order(ts, res);
        CAPTURE(N);
        CHECK(fit.slope >= N + 1 - 0.6);
        CHECK(fit.slope <= N + 1 + 0.2);
    }
    // full depth is accurate to near round-off at t = 1e-3
    const Complex xi(0.0, 1e-3);
    CHECK(std::abs(1.0 / factor(HalfPlane::upper, xi).value - a.evaluate(xi, 4)) <= 1e-14);
}

TEST_CASE("kernels match the real-axis Fourier oracle") {
    // QAWF evaluation of the Fourier integrals of sigma_-/sigma_+ - 1 and 1/sigma_+ - sqrt 2
    CHECK(std::abs(hankel_kernel_k(1.0) - -1.125517778635413e-01) <= 1e-12);
    CHECK(std::abs(hankel_kernel_k(2.0) - -3.256814643112126e-02) <= 1e-12);
    CHECK(std::abs(hankel_kernel_k(5.0) - -5.203196468768741e-03) <= 1e-12);
    CHECK(std::abs(s1_kernel(1.0) - -1.388520229537792e-01) <= 1e-12);
    CHECK(std::abs(s1_kernel(2.0) - -3.889707224875821e-02) <= 1e-12);
    CHECK(std::abs(s1_kernel(5.0) - -5.812393510204929e-03) <= 1e-12);
    CHECK_THROWS_AS(hankel_kernel_k(0.0), Error);
    CHECK_THROWS_AS(s1_kernel(-1.0), Error);
}

TEST_CASE("kernel decay") {
    CHECK(std::abs(hankel_kernel_k(1e4)) <= 2e-9);
    CHECK(std::abs(s1_kernel(1e4)) <= 2e-9);
    // both behave like -1/(2 pi x^2)
    CHECK(std::abs(1e8 * hankel_kernel_k(1e4) + 1.0 / (2.0 * pi)) <= 1e-3);
    double lo = 1e9, hi = 0.0;
    for (double x = 5.0; x <= 50.0; x += 1.0) {
        const double v = x * x * std::abs(hankel_kernel_k(x));
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    CHECK(hi / lo < 3.0);
}

TEST_CASE("kernel values are stable under refinement of the y rule") {
    const LaplaceKernels fine(24, 4096, 1e-14);
    for (double x : {5.0, 12.0, 30.0, 50.0}) {
        CHECK(std::abs(x * x * (fine.k(x) - hankel_kernel_k(x))) <= 1e-6);
        CHECK(std::abs(fine.s1(x) - s1_kernel(x)) <= 1e-12);
    }
}

TEST_CASE("transform of sqrt2 delta + s1 reproduces 1/sigma_+ on the imaginary axis") {
    // int_0^inf e^{-eta x} s1(x) dx, so xi = i eta with 0 < eta < pi
    const QuadratureGrid g = half_line_grid(1.0);
    for (double eta : {0.5, 1.0, 2.0, 3.0}) {
        const double t = g.integrate([eta](double x) { return std::exp(-eta * x) * s1_kernel(x); });
        const Complex target = 1.0 / factor(HalfPlane::upper, Complex(0.0, eta)).value;
        CAPTURE(eta);
        CHECK(std::abs(target.imag()) <= 1e-14);
        CHECK(std::abs(std::sqrt(2.0) + t - target.real()) <= 1e-6);
    }
    // total mass of s1 is 1 - sqrt 2, so the transform equals 1 at the origin
    CHECK(std::abs(s1_tail(2e-3) - (1.0 - std::sqrt(2.0))) <= 2e-3);
}
