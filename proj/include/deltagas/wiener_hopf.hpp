#pragma once

#include <map>
#include <utility>
#include <vector>

#include "deltagas/special.hpp"

namespace deltagas {

// sigma(xi) = (1 + e^{-|xi|}) / 2
double symbol(double xi);

enum class HalfPlane { upper, lower };

struct FactorValue {
    Complex value;
    HalfPlane half_plane;
    Complex at;
};

// sigma_+ (upper) or sigma_- (lower) from the closed Gamma-function formula.
// Defined on the closed half-plane inside the strip |Im xi| < pi.
FactorValue factor(HalfPlane half_plane, Complex xi);

// sigma_-(-i y) for y >= 0. Real and positive on the whole negative imaginary
// axis, tends to 1/sqrt(2) as y grows.
double sigma_minus_axis(double y);

// 1/sigma_+(xi) = sum_{0 <= m <= n} a_{n,m} xi^n log^m(-i xi)
struct ExpansionCoefficients {
    int depth = 0;
    std::map<std::pair<int, int>, Complex> entries;

    Complex at(int n, int m) const;
    // Truncated sum over n <= order.
    Complex evaluate(Complex xi, int order) const;
};

constexpr int kMaxExpansionDepth = 4;

ExpansionCoefficients expansion_coeffs(int N);

// Tabulated Laplace-type representations on the positive axis:
//   k(x)  = -(1/pi) PV int_0^inf e^{-xy} sigma_-(-iy)^2 tan(y/2) dy
//   s1(x) = -(1/pi) PV int_0^inf e^{-xy} sigma_-(-iy) tan(y/2) dy
//   S(x)  = int_x^inf s1 = -(1/pi) PV int_0^inf e^{-xy} sigma_-(-iy) tan(y/2) / y dy
// The y rule is graded toward 0, has folded windows around every odd
// multiple of pi, and stops at an even multiple of pi. For each x the sum is
// cut at the first even multiple of pi beyond 40/x.
class LaplaceKernels {
public:
    explicit LaplaceKernels(int q = 16, int periods = 4096, double y_min = 1e-12);

    double k(double x) const;
    double s1(double x) const;
    double S(double x) const;

    std::size_t size() const { return y_.size(); }
    double y_max() const { return y_max_; }

    static const LaplaceKernels& shared();

private:
    double sum(const std::vector<double>& wg, double x) const;

    std::vector<double> y_;
    std::vector<double> wk_;
    std::vector<double> ws_;
    std::vector<double> wS_;
    double y_max_ = 0.0;
};

double hankel_kernel_k(double x);
double s1_kernel(double x);
// int_x^inf s1(y) dy
double s1_tail(double x);

}  // namespace deltagas
