"""Characteristic functions of the terminal log-price under BSM and Heston.

Both evaluators accept a complex scalar or a numpy array of complex points
and are pure functions of their arguments, so they are safe to call
concurrently.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateParams, NumericOverflow

# largest exponent whose exp() stays inside double range
_MAX_EXPONENT = 709.0


@dataclass(frozen=True)
class BsmParams:
    """Lognormal model inputs: spot, volatility, rate and maturity."""

    s0: float
    sigma: float
    r: float
    t: float

    def __post_init__(self):
        if not self.s0 > 0:
            raise ValueError("s0 must be positive")
        if not self.t > 0:
            raise ValueError("t must be positive")
        if self.sigma < 0:
            raise ValueError("sigma must be nonnegative")


@dataclass(frozen=True)
class HestonParams:
    """Risk-neutral Heston parameters.

    v0:   initial variance (per annum)
    vbar: long-term variance level
    a:    variance mean-reversion speed
    eta:  volatility of the variance process
    rho:  correlation between the price and variance drivers
    """

    v0: float
    vbar: float
    a: float
    eta: float
    rho: float

    def __post_init__(self):
        if not self.v0 > 0:
            raise DegenerateParams("v0 must be positive")
        if not self.vbar > 0:
            raise DegenerateParams("vbar must be positive")
        if not self.a > 0:
            raise DegenerateParams("a must be positive")
        if not self.eta > 0:
            raise DegenerateParams("eta must be positive")
        if not -1.0 <= self.rho <= 1.0:
            raise DegenerateParams("rho must lie in [-1, 1]")

    def feller_slack(self) -> float:
        """2*a*vbar - eta^2; positive iff the variance stays strictly positive."""
        return 2.0 * self.a * self.vbar - self.eta**2


def _check_finite_exponent(expo):
    re = np.real(expo)
    if np.any(re > _MAX_EXPONENT) or not np.all(np.isfinite(re)):
        raise NumericOverflow(
            f"characteristic-function exponent real part reached {np.max(re):g}"
        )


def _as_given(value, w):
    return complex(value[()]) if np.isscalar(w) or np.ndim(w) == 0 else value


def cf_bsm(p: BsmParams, w):
    """Characteristic function of ln(S_t) under the lognormal model.

    exp(i*w*[ln(s0) + (r - sigma^2/2)*t] - w^2 * sigma^2 * t / 2), exact for
    any finite complex w.
    """
    w = np.asarray(w, dtype=complex)
    mean = np.log(p.s0) + (p.r - 0.5 * p.sigma**2) * p.t
    var = p.sigma**2 * p.t
    expo = 1j * w * mean - 0.5 * w * w * var
    _check_finite_exponent(expo)
    return _as_given(np.exp(expo), w)


def _heston_cd(p: HestonParams, t: float, w):
    """The C(t,w) and D(t,w) pieces of the Heston log-price cf exponent.

    Uses the minus-root form of the Riccati solution, which keeps the complex
    logarithm on its principal branch as t and w vary.  At the two points
    where the quadratic coefficient vanishes (w = 0 and w = -i) the solution
    is identically zero, which is substituted directly to avoid a 0/0.
    """
    alpha = -0.5 * w * w - 0.5j * w
    beta = p.a - p.rho * p.eta * 1j * w
    gamma = 0.5 * p.eta**2
    h = np.sqrt(beta * beta - 4.0 * alpha * gamma)
    rminus = (beta - h) / p.eta**2
    rplus = (beta + h) / p.eta**2

    flat = alpha == 0
    g = rminus / np.where(flat, 1.0, rplus)
    decay = np.exp(-h * t)
    denom = 1.0 - g * decay
    c = p.a * (rminus * t - (2.0 / p.eta**2) * np.log(denom / (1.0 - g)))
    d = rminus * (1.0 - decay) / denom
    return np.where(flat, 0.0, c), np.where(flat, 0.0, d)


def cf_heston(p: HestonParams, s0: float, r: float, t: float, w):
    """Characteristic function of ln(S_t) under the Heston model.

    exp(C(t,w)*vbar + D(t,w)*v0 + i*w*ln(s0*e^{r*t})).  Raises
    NumericOverflow instead of returning a non-finite value.
    """
    if not s0 > 0:
        raise ValueError("s0 must be positive")
    if not t > 0:
        raise ValueError("t must be positive")
    w = np.asarray(w, dtype=complex)
    c, d = _heston_cd(p, t, w)
    expo = c * p.vbar + d * p.v0 + 1j * w * (np.log(s0) + r * t)
    _check_finite_exponent(expo)
    return _as_given(np.exp(expo), w)


def cf_heston_gatheral_exponent(p: HestonParams, t: float, w):
    """Forward-measure factor exp(C(t,w)*vbar + D(t,w)*v0) on its own.

    cf_heston equals this factor times exp(i*w*ln(s0*e^{r*t})); exposing it
    separately lets tests cross-check the forward/log-strike formulation of
    the exercise probabilities.
    """
    if not t > 0:
        raise ValueError("t must be positive")
    w = np.asarray(w, dtype=complex)
    c, d = _heston_cd(p, t, w)
    expo = c * p.vbar + d * p.v0
    _check_finite_exponent(expo)
    return _as_given(np.exp(expo), w)
