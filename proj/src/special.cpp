#include "deltagas/special.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "deltagas/error.hpp"

namespace deltagas {

namespace {

constexpr double kShift = 15.0;

// B_{2k} for k = 1..8
constexpr std::array<double, 8> kBernoulli = {
    1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0,
    5.0 / 66.0, -691.0 / 2730.0, 7.0 / 6.0, -3617.0 / 510.0};

bool is_pole(Complex z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

void check_finite(Complex z, const char* who) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw Error(ErrorCode::invalid_argument, std::string(who) + ": non-finite argument");
}

}  // namespace

Complex log_gamma(Complex z) {
    check_finite(z, "log_gamma");
    if (is_pole(z)) throw Error(ErrorCode::pole, "log_gamma at nonpositive integer");

    // Upward recurrence. Principal logs keep the cut on the negative real axis.
    Complex shift_sum = 0.0;
    Complex w = z;
    while (w.real() < kShift) {
        shift_sum += std::log(w);
        w += 1.0;
    }
    const Complex inv = 1.0 / w;
    const Complex inv2 = inv * inv;
    Complex series = 0.0;
    Complex p = inv;
    for (std::size_t k = 1; k <= kBernoulli.size(); ++k) {
        series += kBernoulli[k - 1] / (2.0 * k * (2.0 * k - 1.0)) * p;
        p *= inv2;
    }
    const double half_log_2pi = 0.5 * std::log(2.0 * std::numbers::pi);
    return (w - 0.5) * std::log(w) - w + half_log_2pi + series - shift_sum;
}

Complex digamma(Complex z) {
    check_finite(z, "digamma");
    if (is_pole(z)) throw Error(ErrorCode::pole, "digamma at nonpositive integer");

    Complex shift_sum = 0.0;
    Complex w = z;
    while (w.real() < kShift) {
        shift_sum += 1.0 / w;
        w += 1.0;
    }
    const Complex inv = 1.0 / w;
    const Complex inv2 = inv * inv;
    Complex series = 0.0;
    Complex p = inv2;
    for (std::size_t k = 1; k <= kBernoulli.size(); ++k) {
        series += kBernoulli[k - 1] / (2.0 * k) * p;
        p *= inv2;
    }
    return std::log(w) - 0.5 * inv - series - shift_sum;
}

Complex recip_gamma(Complex s) {
    check_finite(s, "recip_gamma");
    if (is_pole(s)) return 0.0;
    if (s.real() >= 0.5) return std::exp(-log_gamma(s));
    // reflection: 1/Gamma(s) = sin(pi s) Gamma(1-s) / pi
    constexpr double pi = std::numbers::pi;
    return std::sin(pi * s) * std::exp(log_gamma(1.0 - s)) / pi;
}

}  // namespace deltagas
