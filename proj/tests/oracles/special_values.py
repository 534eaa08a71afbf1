"""Reference values for the complex Gamma family and the factor sigma_+, via mpmath at 50 digits."""
import mpmath as mp

mp.mp.dps = 50


def show(name, z):
    z = mp.mpc(z)
    print(name, mp.nstr(z.real, 20), mp.nstr(z.imag, 20))


show("loggamma(0.5+0.3i)", mp.loggamma(mp.mpc(0.5, 0.3)))
show("loggamma(-2.5+1i)", mp.loggamma(mp.mpc(-2.5, 1)))
show("loggamma(3-7i)", mp.loggamma(mp.mpc(3, -7)))
show("digamma(0.5)", mp.digamma(0.5))
show("digamma(1+2i)", mp.digamma(mp.mpc(1, 2)))
show("rgamma(2.5)", mp.rgamma(2.5))
show("rgamma(-3.5+0.5i)", mp.rgamma(mp.mpc(-3.5, 0.5)))

# sigma_+ at 0.7+0.4i from the Cauchy projection of log sigma
xi = mp.mpc(0.7, 0.4)
phi = lambda e: mp.log((1 + mp.exp(-abs(e))) / 2)
cauchy = mp.quad(lambda e: phi(e) / (e - xi), [-mp.inf, -10, 0, 10, mp.inf]) / (2j * mp.pi)
show("sigma_plus(0.7+0.4i) cauchy", mp.exp(cauchy))
w = xi / (2j * mp.pi)
show("sigma_plus(0.7+0.4i) closed", mp.sqrt(mp.pi) * mp.exp(w * (mp.log(-1j * xi) - mp.log(2 * mp.pi) - 1)) / mp.gamma(mp.mpf(1) / 2 + w))

# int_0^inf 2 t^2 e^{-r t^2} / (t^2 + i) dt, a Laplace-Cauchy integral
s = mp.mpf(1) / 2
for r in (1, 2, 5):
    lhs = mp.quad(lambda t: 2 * t * mp.exp(-r * t * t) * t / (t * t + 1j), [0, 1, mp.inf])
    show("laplace_cauchy r=%d" % r, lhs)
