#include <doctest.h>

#include <cmath>
#include <numbers>

#include "deltagas/asymptotics.hpp"
#include "deltagas/error.hpp"
#include "deltagas/fredholm.hpp"

using namespace deltagas;
using std::numbers::pi;

TEST_CASE("series arithmetic") {
    CHECK(std::abs(q_series(0.1) - 0.340840247068126) <= 1e-14);
    CHECK(std::abs(q_series(1e-300) - 1.0 / pi) <= 1e-15);
    CHECK(std::abs(ef_series(0.0 + 1e-300) - pi * pi / 12.0) <= 1e-15);
    CHECK(std::abs(ef_series(0.2) - (pi * pi / 12.0 - 0.1)) <= 1e-15);
    const double g = 0.25;
    CHECK(std::abs(eb_series(g) - (g - 4.0 / (3.0 * pi) * std::pow(g, 1.5) + (1.0 / 6.0 - 1.0 / (pi * pi)) * g * g)) <=
          1e-15);
    const double r = 40.0;
    CHECK(std::abs(fint_series(r) - (r + (std::log(r) + std::log(pi / 2.0) + 1.0) / pi)) <= 1e-13);
    const auto c = gplus_coeffs(r);
    CHECK(std::abs(c[0] - (std::log(r) + std::log(pi / 2.0) + 1.0) / (2.0 * pi)) <= 1e-15);
    CHECK(std::abs(c[1] + r * (std::log(r) + std::numbers::egamma - 1.0) / (2.0 * pi)) <= 1e-13);
    CHECK(std::abs(c[2] + r * r * (std::log(r) + std::numbers::egamma - 1.5) / (4.0 * pi)) <= 1e-11);
    // fint_series is r + 2 g0
    CHECK(std::abs(fint_series(r) - (r + 2.0 * c[0])) <= 1e-13);
    CHECK(std::abs(xi2_coefficient_series(r) -
                   (-r * r * r / 24.0 - r * r / (8.0 * pi) * (std::log(r) + std::log(pi / 2.0) - 1.0))) <= 1e-10);
}

TEST_CASE("reconstructed energy tends to pi^2/12") {
    double prev = INFINITY;
    for (double r : {1e2, 1e3, 1e4, 1e5}) {
        const double gamma = pi / r;
        const double d = std::abs(ef_reconstruction(r) - pi * pi / 12.0);
        CAPTURE(r);
        CHECK(d <= 10.0 * gamma * std::log(1.0 / gamma));
        CHECK(d < prev);
        prev = d;
    }
}

TEST_CASE("numerical energy approaches the weak-coupling series") {
    std::vector<double> gs, res;
    for (double g : {0.2, 0.1, 0.05}) {
        const double e = energy(solve_for_gamma(Statistics::Fermi, g, 800));
        gs.push_back(g);
        res.push_back(e - ef_series(g));
    }
    const OrderFit fit = fit_order(gs, res);
    CHECK(fit.slope >= 1.7);
}

TEST_CASE("fit_order") {
    // residual = 3 x^2 exactly
    std::vector<double> xs = {0.1, 0.05, 0.02, 0.01}, ys;
    for (double x : xs) ys.push_back(3.0 * x * x);
    const OrderFit f = fit_order(xs, ys);
    CHECK(std::abs(f.slope - 2.0) <= 1e-13);
    CHECK(std::abs(f.intercept - std::log(3.0)) <= 1e-12);
    CHECK(f.stderr_slope <= 1e-12);

    // a log factor pulls the fitted slope below the power
    xs.clear();
    ys.clear();
    for (int i = 0; i < 9; ++i) {
        const double x = std::pow(10.0, -1.0 - 2.0 * i / 8.0);
        xs.push_back(x);
        ys.push_back(0.1 * x * x * std::log(1.0 / x));
    }
    // sign of the residual is ignored
    ys[3] = -ys[3];
    const OrderFit g = fit_order(xs, ys);
    CHECK(g.slope < 2.0);
    CHECK(g.slope > 1.5);

    CHECK_THROWS_AS(fit_order({0.1, 0.2}, {1.0, 2.0}), Error);
    CHECK_THROWS_AS(fit_order({0.1, 0.2, 0.3}, {1.0, 2.0}), Error);
    try {
        fit_order({0.1, 0.2, 0.3}, {1.0, 0.0, 2.0});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::degenerate_fit);
    }
    try {
        fit_order({0.1, 0.1, 0.1}, {1.0, 2.0, 3.0});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::degenerate_fit);
    }
}

TEST_CASE("synthetic fit against numpy") {
    // x^2 log^2(1/x) at x = logspace(-1, -3, 9); scipy linregress reference
    std::vector<double> xs, ys;
    for (int i = 0; i < 9; ++i) {
        const double x = std::pow(10.0, -1.0 - 2.0 * i / 8.0);
        xs.push_back(x);
        ys.push_back(x * x * std::log(1.0 / x) * std::log(1.0 / x));
    }
    const OrderFit f = fit_order(xs, ys);
    CHECK(std::abs(f.slope - 1.5348539959995928) <= 1e-12);
    CHECK(std::abs(f.stderr_slope - 0.02734240583471656) <= 1e-12);
}

TEST_CASE("truncation and ordering") {
    AsymptoticSeries s = charge_series();
    CHECK(s.truncated(1).evaluate(0.3) == 1.0 / pi);
    CHECK(s.truncated(10).terms.size() == 3);
    CHECK(s.evaluate(0.3, 2) == s.truncated(2).evaluate(0.3));
    AsymptoticSeries shuffled = s;
    std::swap(shuffled.terms[0], shuffled.terms[2]);
    shuffled.sort_terms();
    for (std::size_t i = 0; i < s.terms.size(); ++i) {
        CHECK(shuffled.terms[i].p == s.terms[i].p);
        CHECK(shuffled.terms[i].m == s.terms[i].m);
    }
    AsymptoticSeries f = fint_expansion();
    std::reverse(f.terms.begin(), f.terms.end());
    f.sort_terms();
    CHECK(f.terms[0].p == 1.0);
    CHECK(f.terms[1].m == 1);
}
