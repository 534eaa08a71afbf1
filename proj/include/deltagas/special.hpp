#pragma once

#include <complex>

namespace deltagas {

using Complex = std::complex<double>;

// Principal branch of log Gamma, continuous off the negative real axis.
// Same convention as scipy.special.loggamma / mpmath.loggamma.
Complex log_gamma(Complex z);

Complex digamma(Complex z);

// 1/Gamma(s), entire.
Complex recip_gamma(Complex s);

}  // namespace deltagas
