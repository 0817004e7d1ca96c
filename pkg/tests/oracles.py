"""Independent reference implementations used to cross-check the library.

Everything here is deliberately written from scratch against textbook
formulas (error function, high-precision arithmetic) rather than reusing
the code paths under test.
"""

from math import erf, exp, log, pi, sqrt

import mpmath as mp
import numpy as np

from hestonfit.charfn import cf_heston_gatheral_exponent
from hestonfit.quadrature import integrate


def normal_cdf(x: float) -> float:
    return 0.5 * (1.0 + erf(x / sqrt(2.0)))


def bsm_closed_form(s0, sigma, r, t, k):
    """Lognormal call value and exercise probabilities via the error function."""
    srt = sigma * sqrt(t)
    d1 = (log(s0 / k) + (r + 0.5 * sigma**2) * t) / srt
    d2 = d1 - srt
    n1, n2 = normal_cdf(d1), normal_cdf(d2)
    return s0 * n1 - k * exp(-r * t) * n2, n1, n2


def cf_bsm_highprec(s0, sigma, r, t, w) -> complex:
    """50-digit evaluation of the lognormal log-price cf."""
    with mp.workdps(50):
        s0, sigma, r, t = map(mp.mpf, map(repr, (s0, sigma, r, t)))
        w = mp.mpc(w)
        mean = mp.log(s0) + (r - sigma**2 / 2) * t
        return complex(mp.exp(1j * w * mean - w * w * sigma**2 * t / 2))


def cf_heston_highprec(v0, vbar, a, eta, rho, s0, r, t, w) -> complex:
    """50-digit re-derivation of the Heston log-price cf (minus-root form)."""
    with mp.workdps(50):
        v0, vbar, a, eta, rho, s0, r, t = map(
            mp.mpf, map(repr, (v0, vbar, a, eta, rho, s0, r, t)))
        w = mp.mpc(w)
        alpha = -w * w / 2 - 1j * w / 2
        beta = a - rho * eta * 1j * w
        gamma = eta**2 / 2
        h = mp.sqrt(beta * beta - 4 * alpha * gamma)
        rminus = (beta - h) / eta**2
        rplus = (beta + h) / eta**2
        g = rminus / rplus
        decay = mp.exp(-h * t)
        big_c = a * (rminus * t - (2 / eta**2) * mp.log((1 - g * decay) / (1 - g)))
        big_d = rminus * (1 - decay) / (1 - g * decay)
        return complex(mp.exp(big_c * vbar + big_d * v0
                              + 1j * w * mp.log(s0 * mp.exp(r * t))))


def pi2_forward_form(p, s0, r, t, k, q) -> float:
    """Exercise probability from the forward log-moneyness factorization.

    1/2 + (1/pi) * int Re[e^{i w x} e^{C vbar + D v0} / (i w)] dw with
    x = ln(forward / strike); equivalent to the log-price form, used as a
    structural cross-check.
    """
    x = log(s0) + r * t - log(k)

    def integrand(w):
        factor = cf_heston_gatheral_exponent(p, t, w + 0.0j)
        return (np.exp(1j * w * x) * factor / (1j * w)).real

    return 0.5 + integrate(integrand, q.lower_limit, q.upper_limit, q) / pi
