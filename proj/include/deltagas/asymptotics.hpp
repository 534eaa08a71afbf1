#pragma once

#include <array>
#include <cstddef>
#include <limits>
#include <vector>

namespace deltagas {

// c * v^p * log^m(v), natural log of the expansion variable
struct SeriesTerm {
    double p = 0.0;
    int m = 0;
    double c = 0.0;
};

enum class SeriesVariable { kappa, gamma, r };
enum class SeriesDirection { to_zero, to_infinity };

struct AsymptoticSeries {
    std::vector<SeriesTerm> terms;   // most dominant first
    SeriesVariable variable = SeriesVariable::kappa;
    SeriesDirection direction = SeriesDirection::to_zero;

    double evaluate(double v, std::size_t count = std::numeric_limits<std::size_t>::max()) const;
    AsymptoticSeries truncated(std::size_t count) const;
    // Reorders terms by dominance in the series direction.
    void sort_terms();
};

AsymptoticSeries charge_series();        // Q(kappa), kappa -> 0
AsymptoticSeries fermi_energy_series();  // epsilon_F(gamma), gamma -> 0
AsymptoticSeries bose_energy_series();   // epsilon_B(gamma), gamma -> 0
AsymptoticSeries fint_expansion();       // int f over [-r/2, r/2], r -> inf

double q_series(double kappa);
double ef_series(double gamma);
double eb_series(double gamma);
double fint_series(double r);

// Coefficients g_k^+ for k = 0, 1, 2. The k = 1 entry is the imaginary part
// (the coefficient itself is purely imaginary).
std::array<double, 3> gplus_coeffs(double r);

// -r^3/24 - 2 (r^2 / 16 pi)(log r + log(pi/2) - 1)
double xi2_coefficient_series(double r);

// pi^2 * (-2) * xi2_coefficient_series(r) / fint_series(r)^3, the energy
// rebuilt from the xi^2 coefficient and the zeroth moment.
double ef_reconstruction(double r);

struct OrderFit {
    double slope = 0.0;
    double stderr_slope = 0.0;
    double intercept = 0.0;
};

// Least-squares slope of log|residual| against log x. Needs at least three
// points; log factors are not modelled.
OrderFit fit_order(const std::vector<double>& xs, const std::vector<double>& residuals);

}  // namespace deltagas
