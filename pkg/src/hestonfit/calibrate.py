"""Fit Heston parameters to market call quotes.

The optimizer works on a 5-vector x = (v0, vbar, eta, rho, s) whose last
coordinate is the Feller slack s = 2*a*vbar - eta^2; the mean-reversion
speed is recovered as a = (s + eta^2) / (2*vbar).  Bounding s >= 0 keeps
every iterate inside the region where the variance process stays positive,
and implicitly caps a through the bounds on s, eta and vbar.

Two drivers share the squared-price-error objective: a bounded
trust-region-reflective least-squares pass (deterministic) and a seeded
adaptive simulated-annealing search followed by a local polish.
"""

import time
from dataclasses import dataclass, field
from math import exp, inf, isfinite, log

import numpy as np
from scipy.optimize import least_squares

from .charfn import HestonParams
from .errors import DegenerateParams, HestonFitError
from .pricer import OptionSpec, price_call_heston
from .quadrature import QuadratureConfig

_FD_REL_STEP = 1e-7      # forward-difference Jacobian step (relative)
_SA_T0 = 1.0             # initial annealing temperature
_SA_T_MIN = 1e-6         # temperature reached at the end of the budget
_SA_STEP0 = 0.25         # initial per-dimension step, as a fraction of range
_SA_STEP_GROW = 1.05
_SA_STEP_SHRINK = 0.95
_SA_STEP_RANGE = (0.01, 1.0)
_DEFAULT_EVALS = {"local": 400, "global": 20000}


@dataclass(frozen=True)
class MarketQuote:
    """One observed call option: contract terms plus mid/bid/ask prices."""

    s0: float
    t: float
    k: float
    r: float
    mid: float
    bid: float
    ask: float

    def __post_init__(self):
        if not self.t > 0:
            raise ValueError("t must be positive")
        if min(self.mid, self.bid, self.ask) <= 0:
            raise ValueError("prices must be positive")
        if not self.bid <= self.mid <= self.ask:
            raise ValueError(f"bid <= mid <= ask violated: "
                             f"{self.bid}/{self.mid}/{self.ask}")

    def half_spread(self) -> float:
        return 0.5 * (self.ask - self.bid)


@dataclass(frozen=True)
class OptVector:
    """Optimizer coordinates: (v0, vbar, eta, rho, feller_slack)."""

    v0: float
    vbar: float
    eta: float
    rho: float
    feller_slack: float

    def as_array(self) -> np.ndarray:
        return np.array([self.v0, self.vbar, self.eta, self.rho,
                         self.feller_slack])

    @classmethod
    def from_array(cls, x) -> "OptVector":
        return cls(*(float(v) for v in x))


DEFAULT_X0 = OptVector(0.5, 0.5, 1.0, -0.5, 1.0)
# zero lower bounds on v0/vbar/eta would let iterates hit divisions by zero
# inside the characteristic function and the a-recovery, so they are lifted
DEFAULT_LB = OptVector(1e-6, 1e-6, 1e-6, -1.0, 0.0)
DEFAULT_UB = OptVector(1.0, 1.0, 5.0, 1.0, 20.0)


def params_from_optvector(x: OptVector) -> HestonParams:
    """Map optimizer coordinates to model parameters.

    a = (feller_slack + eta^2) / (2 * vbar); raises DegenerateParams when
    vbar is zero or the recovered a is not positive.
    """
    if x.vbar == 0:
        raise DegenerateParams("vbar = 0: cannot recover mean-reversion speed")
    a = (x.feller_slack + x.eta**2) / (2.0 * x.vbar)
    if not a > 0:
        raise DegenerateParams(f"recovered mean-reversion speed a = {a:g} <= 0")
    return HestonParams(v0=x.v0, vbar=x.vbar, a=a, eta=x.eta, rho=x.rho)


def optvector_from_params(p: HestonParams) -> OptVector:
    """Inverse of params_from_optvector."""
    return OptVector(v0=p.v0, vbar=p.vbar, eta=p.eta, rho=p.rho,
                     feller_slack=p.feller_slack())


@dataclass(frozen=True)
class CalibrationConfig:
    method: str = "local"
    x0: OptVector = DEFAULT_X0
    lb: OptVector = DEFAULT_LB
    ub: OptVector = DEFAULT_UB
    seed: int | None = None
    max_iterations: int | None = None    # method default when None
    ftol: float = 1e-10
    xtol: float = 1e-10
    gtol: float = 1e-8

    def __post_init__(self):
        if self.method not in ("local", "global"):
            raise ValueError(f"unknown method {self.method!r}")
        if self.method == "global" and self.seed is None:
            raise ValueError("global calibration requires a seed")
        lb, x0, ub = self.lb.as_array(), self.x0.as_array(), self.ub.as_array()
        if not (np.all(lb <= x0) and np.all(x0 <= ub)):
            raise ValueError("x0 must lie within [lb, ub]")

    def budget(self) -> int:
        return self.max_iterations if self.max_iterations is not None \
            else _DEFAULT_EVALS[self.method]


@dataclass(frozen=True)
class QuoteFit:
    """Per-option calibration outcome."""

    quote: MarketQuote
    model_price: float
    abs_difference: float
    within_spread: bool


@dataclass(frozen=True)
class CalibrationResult:
    params: HestonParams
    objective: float                # mean squared residual
    avg_abs_distance: float
    within_spread_count: int
    per_option: list[QuoteFit] = field(repr=False)
    accepted: bool
    converged: bool
    message: str
    elapsed: float
    evaluations: int


def _model_prices(params: HestonParams, quotes, q: QuadratureConfig):
    prices = []
    for i, quote in enumerate(quotes, start=1):
        option = OptionSpec(s0=quote.s0, k=quote.k, r=quote.r, t=quote.t)
        try:
            prices.append(price_call_heston(params, option, q).price)
        except HestonFitError as e:
            raise type(e)(f"quote {i} (k={quote.k}, t={quote.t}): {e}") from e
    return prices


def objective(params: HestonParams, quotes, q: QuadratureConfig):
    """Mean squared mid-price error and the per-quote residuals mid - model."""
    if not quotes:
        raise ValueError("quotes must be nonempty")
    residuals = [quote.mid - price
                 for quote, price in zip(quotes, _model_prices(params, quotes, q))]
    mse = float(np.mean(np.square(residuals)))
    return mse, residuals


def acceptance_check(per_option) -> bool:
    """True iff the mean absolute mid-price error is at most the mean half-spread."""
    if not per_option:
        return False
    avg_distance = np.mean([row.abs_difference for row in per_option])
    avg_half_spread = np.mean([row.quote.half_spread() for row in per_option])
    return bool(avg_distance <= avg_half_spread)


def _finish_run(x: OptVector, quotes, q, started, evaluations, converged,
                message) -> CalibrationResult:
    params = params_from_optvector(x)
    prices = _model_prices(params, quotes, q)
    rows = [QuoteFit(quote=quote, model_price=price,
                     abs_difference=abs(quote.mid - price),
                     within_spread=quote.bid <= price <= quote.ask)
            for quote, price in zip(quotes, prices)]
    mse = float(np.mean([(row.quote.mid - row.model_price) ** 2 for row in rows]))
    return CalibrationResult(
        params=params,
        objective=mse,
        avg_abs_distance=float(np.mean([row.abs_difference for row in rows])),
        within_spread_count=sum(row.within_spread for row in rows),
        per_option=rows,
        accepted=acceptance_check(rows),
        converged=converged,
        message=message,
        elapsed=time.perf_counter() - started,
        evaluations=evaluations,
    )


def _residual_fn(quotes, q, counter):
    def residuals(x):
        counter[0] += 1
        params = params_from_optvector(OptVector.from_array(x))
        prices = _model_prices(params, quotes, q)
        return np.array([quote.mid - price
                         for quote, price in zip(quotes, prices)])
    return residuals


def _local_pass(x_start: np.ndarray, quotes, cfg: CalibrationConfig,
                q: QuadratureConfig, counter, max_nfev: int):
    return least_squares(
        _residual_fn(quotes, q, counter),
        x_start,
        bounds=(cfg.lb.as_array(), cfg.ub.as_array()),
        method="trf",
        jac="2-point",
        diff_step=_FD_REL_STEP,
        ftol=cfg.ftol,
        xtol=cfg.xtol,
        gtol=cfg.gtol,
        max_nfev=max_nfev,
    )


def calibrate_local(quotes, cfg: CalibrationConfig,
                    q: QuadratureConfig = QuadratureConfig()) -> CalibrationResult:
    """Bounded trust-region least squares from cfg.x0; deterministic."""
    if cfg.method != "local":
        raise ValueError("calibrate_local requires cfg.method == 'local'")
    if not quotes:
        raise ValueError("quotes must be nonempty")
    started = time.perf_counter()
    counter = [0]
    res = _local_pass(cfg.x0.as_array(), quotes, cfg, q, counter, cfg.budget())
    converged = res.status > 0
    message = res.message if converged else f"not converged: {res.message}"
    return _finish_run(OptVector.from_array(res.x), quotes, q, started,
                       counter[0], converged, message)


def _sa_generate(rng, x, steps, dim, temperature, lb, ub):
    u = rng.uniform()
    reach = np.sign(u - 0.5) * temperature * (
        (1.0 + 1.0 / temperature) ** abs(2.0 * u - 1.0) - 1.0)
    cand = x.copy()
    cand[dim] = np.clip(x[dim] + reach * steps[dim] * (ub[dim] - lb[dim]),
                        lb[dim], ub[dim])
    return cand


def calibrate_global(quotes, cfg: CalibrationConfig,
                     q: QuadratureConfig = QuadratureConfig()) -> CalibrationResult:
    """Seeded simulated annealing over the bounded vector, plus a local polish.

    One coordinate is perturbed per objective evaluation with a fat-tailed
    step whose size both follows the cooling schedule
    T_k = exp(-c * k^(1/5)) and adapts per dimension to the accept/reject
    history.  Candidates whose repricing fails are rejected outright.  The
    best point visited is refined by one trust-region least-squares run.
    """
    if cfg.method != "global":
        raise ValueError("calibrate_global requires cfg.method == 'global'")
    if not quotes:
        raise ValueError("quotes must be nonempty")
    started = time.perf_counter()
    rng = np.random.default_rng(cfg.seed)
    lb, ub = cfg.lb.as_array(), cfg.ub.as_array()
    budget = cfg.budget()
    cooling = log(_SA_T0 / _SA_T_MIN) / budget ** 0.2

    evaluations = 0

    def sse(x) -> float:
        nonlocal evaluations
        evaluations += 1
        try:
            params = params_from_optvector(OptVector.from_array(x))
            return float(sum(r * r for r in objective(params, quotes, q)[1]))
        except HestonFitError:
            return inf

    x = np.clip(cfg.x0.as_array(), lb, ub)
    f = sse(x)
    best_x, best_f = x.copy(), f
    steps = np.full(len(x), _SA_STEP0)

    for k in range(1, budget):
        dim = (k - 1) % len(x)
        temperature = _SA_T0 * exp(-cooling * k ** 0.2)
        cand = _sa_generate(rng, x, steps, dim, temperature, lb, ub)
        f_cand = sse(cand)
        delta = f_cand - f
        accept = isfinite(f_cand) and (
            delta <= 0 or rng.uniform() < exp(max(-delta / temperature, -700.0)))
        if accept:
            x, f = cand, f_cand
            steps[dim] = min(_SA_STEP_RANGE[1], steps[dim] * _SA_STEP_GROW)
            if f < best_f:
                best_x, best_f = x.copy(), f
        else:
            steps[dim] = max(_SA_STEP_RANGE[0], steps[dim] * _SA_STEP_SHRINK)

    counter = [0]
    converged, message = True, "annealing finished; polish converged"
    try:
        res = _local_pass(best_x, quotes, cfg, q, counter,
                          _DEFAULT_EVALS["local"])
        polished = np.array(res.x)
        if res.status > 0 and sse(polished) <= best_f:
            best_x = polished
        elif res.status <= 0:
            converged, message = False, f"polish not converged: {res.message}"
    except HestonFitError as e:
        converged, message = False, f"polish failed: {e}"
    evaluations += counter[0]

    return _finish_run(OptVector.from_array(best_x), quotes, q, started,
                       evaluations, converged, message)
