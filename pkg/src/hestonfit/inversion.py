"""Fourier inversion of a characteristic function into probabilities.

pi2 gives P(ln S_T > log-strike), pi1 the same probability under the
share measure (the call delta), and cdf_from_cf the plain distribution
function.  All three integrate the real part of the inversion integrand
over [lower_limit, upper_limit] with the adaptive Gauss-Kronrod engine.
"""

import numpy as np

from .errors import DegenerateCf, OutOfRange
from .quadrature import QuadratureConfig, integrate

_CF_AT_ZERO_TOL = 1e-12
_MIN_FORWARD = 1e-300


def _check_cf(cf):
    if abs(complex(cf(0.0 + 0.0j)) - 1.0) > _CF_AT_ZERO_TOL:
        raise DegenerateCf("characteristic function does not satisfy cf(0) = 1")


def _finish(raw: float, q: QuadratureConfig, what: str) -> float:
    if raw < -q.abs_tol or raw > 1.0 + q.abs_tol:
        raise OutOfRange(f"{what} = {raw!r} leaves [0, 1] beyond tolerance")
    return min(1.0, max(0.0, raw))


def pi2(cf, log_strike: float, q: QuadratureConfig) -> float:
    """Exercise probability: 1/2 + (1/pi) * int Re[e^{-iwk} cf(w) / (iw)] dw."""
    _check_cf(cf)

    def integrand(w):
        return (np.exp(-1j * w * log_strike) * cf(w + 0.0j) / (1j * w)).real

    raw = 0.5 + integrate(integrand, q.lower_limit, q.upper_limit, q) / np.pi
    return _finish(raw, q, "pi2")


def pi1(cf, log_strike: float, q: QuadratureConfig) -> float:
    """Share-measure exercise probability (the call delta).

    Same inversion as pi2 applied to cf(w - i) / cf(-i); the denominator is
    the undiscounted forward, so a vanishing cf(-i) is rejected.
    """
    _check_cf(cf)
    forward = complex(cf(-1j))
    if abs(forward) < _MIN_FORWARD:
        raise DegenerateCf(f"cf(-i) = {forward!r} is too small to divide by")

    def integrand(w):
        shifted = cf(w - 1j)
        return (np.exp(-1j * w * log_strike) * shifted / (1j * w * forward)).real

    raw = 0.5 + integrate(integrand, q.lower_limit, q.upper_limit, q) / np.pi
    return _finish(raw, q, "pi1")


def cdf_from_cf(cf, x: float, q: QuadratureConfig) -> float:
    """Distribution function F(x) = 1/2 - (1/pi) * int Re[e^{-iwx} cf(w)/(iw)] dw."""
    _check_cf(cf)

    def integrand(w):
        return (np.exp(-1j * w * x) * cf(w + 0.0j) / (1j * w)).real

    raw = 0.5 - integrate(integrand, q.lower_limit, q.upper_limit, q) / np.pi
    return _finish(raw, q, "cdf")
