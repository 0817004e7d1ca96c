"""European call valuation from the two inversion probabilities.

price = s0 * pi1 - e^{-r t} * k * pi2, with the characteristic function
supplied by either model.
"""

from dataclasses import dataclass
from math import exp, log

from .charfn import BsmParams, HestonParams, cf_bsm, cf_heston
from .errors import OutOfRange
from .inversion import pi1, pi2
from .quadrature import QuadratureConfig

_NO_ARB_TOL = 1e-6


@dataclass(frozen=True)
class OptionSpec:
    """A single European call contract: spot, strike, rate, maturity."""

    s0: float
    k: float
    r: float
    t: float

    def __post_init__(self):
        if not self.s0 > 0:
            raise ValueError("s0 must be positive")
        if not self.k > 0:
            raise ValueError("k must be positive")
        if not self.t > 0:
            raise ValueError("t must be positive")


@dataclass(frozen=True)
class PriceBreakdown:
    """Call value together with the two probabilities it was built from."""

    price: float
    pi1: float
    pi2: float


def _assemble(cf, s0: float, k: float, r: float, t: float,
              q: QuadratureConfig) -> PriceBreakdown:
    log_strike = log(k)
    p1 = pi1(cf, log_strike, q)
    p2 = pi2(cf, log_strike, q)
    price = s0 * p1 - exp(-r * t) * k * p2
    # a violated arbitrage bound means the truncated integrals went bad
    floor = max(0.0, s0 - k * exp(-r * t))
    if price < floor - _NO_ARB_TOL or price > s0 + _NO_ARB_TOL:
        raise OutOfRange(f"price {price!r} outside the no-arbitrage band "
                         f"[{floor:g}, {s0:g}]; widen the integration range")
    return PriceBreakdown(price=price, pi1=p1, pi2=p2)


def price_call_bsm(p: BsmParams, k: float,
                   q: QuadratureConfig = QuadratureConfig()) -> PriceBreakdown:
    """Call value under the lognormal model via Fourier inversion."""
    if not k > 0:
        raise ValueError("k must be positive")
    return _assemble(lambda w: cf_bsm(p, w), p.s0, k, p.r, p.t, q)


def price_call_heston(p: HestonParams, o: OptionSpec,
                      q: QuadratureConfig = QuadratureConfig()) -> PriceBreakdown:
    """Call value under the Heston model via Fourier inversion."""
    return _assemble(lambda w: cf_heston(p, o.s0, o.r, o.t, w),
                     o.s0, o.k, o.r, o.t, q)


def price_calls_heston(p: HestonParams, options,
                       q: QuadratureConfig = QuadratureConfig()):
    """Price a batch of contracts; order of results follows the input."""
    return [price_call_heston(p, o, q) for o in options]
