"""Frequency-space oracle for G+(0), the zero-frequency value of the projected right side.

G+(0) = -r/2 + (1/pi) int_0^inf Re[(1 - e^{-i r eta}) / (eta sigma_+(eta))] / eta d eta

Finite part by adaptive quadrature on half-period panels, tail by QAWF.
"""
import warnings

import numpy as np
from scipy.integrate import quad
from scipy.special import loggamma

warnings.filterwarnings("ignore")


def inv_sigma_plus(e):
    w = e / (2j * np.pi)
    return np.exp(loggamma(0.5 + w) - w * (np.log(e) - 0.5j * np.pi - np.log(2 * np.pi) - 1)) / np.sqrt(np.pi)


def gplus0(r, P=40.0):
    f = lambda e: ((1 - np.exp(-1j * r * e)) * inv_sigma_plus(e)).real / e**2
    edges = np.concatenate([[0], np.geomspace(1e-12, 1e-3, 40), np.arange(1e-3, P, np.pi / r), [P]])
    edges = np.unique(edges)
    a = sum(quad(f, lo, hi, epsabs=1e-15, epsrel=1e-13, limit=200)[0] for lo, hi in zip(edges[:-1], edges[1:]))
    b = quad(lambda e: inv_sigma_plus(e).real / e**2, P, np.inf, epsabs=1e-15, epsrel=1e-13, limit=500)[0]
    c1 = quad(lambda e: inv_sigma_plus(e).real / e**2, P, np.inf, weight="cos", wvar=r, epsabs=1e-15)[0]
    c2 = quad(lambda e: inv_sigma_plus(e).imag / e**2, P, np.inf, weight="sin", wvar=r, epsabs=1e-15)[0]
    return -r / 2 + (a + b - c1 - c2) / np.pi


if __name__ == "__main__":
    for r in (10.0, 20.0, 50.0):
        print(r, repr(gplus0(r)))
