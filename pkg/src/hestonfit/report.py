"""Calibration report rendering.

Two renderings of the same content: a fixed-width table for the terminal
and a machine-readable form (key=value scalars plus a CSV block).  Neither
contains wall-clock timing, so identical runs produce identical bytes.
"""

import hashlib
from dataclasses import dataclass

import numpy as np

from .calibrate import CalibrationConfig, CalibrationResult
from .quadrature import QuadratureConfig


def config_hash(cfg: CalibrationConfig, q: QuadratureConfig) -> str:
    """Short stable digest of every setting that shapes a calibration run."""
    canon = repr((cfg.method, cfg.x0, cfg.lb, cfg.ub, cfg.seed, cfg.budget(),
                  cfg.ftol, cfg.xtol, cfg.gtol, q))
    return hashlib.sha256(canon.encode()).hexdigest()[:8]


@dataclass(frozen=True)
class Report:
    dataset_id: str
    method: str
    seed: int | None
    config_digest: str
    result: CalibrationResult

    @property
    def accepted(self) -> bool:
        # an unconverged run is never reported as acceptable
        return self.result.accepted and self.result.converged

    def mean_half_spread(self) -> float:
        return float(np.mean([row.quote.half_spread()
                              for row in self.result.per_option]))


def render_text(report: Report) -> str:
    res = report.result
    p = res.params
    seed = "-" if report.seed is None else str(report.seed)
    lines = [
        f"dataset: {report.dataset_id}   method: {report.method}   "
        f"seed: {seed}   config: {report.config_digest}",
        f"solution: v0={p.v0:.4f}  vbar={p.vbar:.4f}  eta={p.eta:.4f}  "
        f"rho={p.rho:.4f}  a={p.a:.4f}",
        f"{'id':>4} {'mid':>10} {'model':>10} {'abs_diff':>10} {'within':>7}",
    ]
    for i, row in enumerate(res.per_option, start=1):
        lines.append(f"{i:>4} {row.quote.mid:>10.4f} {row.model_price:>10.4f} "
                     f"{row.abs_difference:>10.4f} "
                     f"{'yes' if row.within_spread else 'no':>7}")
    lines += [
        f"n_options: {len(res.per_option)}",
        f"avg_abs_distance: {res.avg_abs_distance:.4f}",
        f"mean_half_spread: {report.mean_half_spread():.4f}",
        f"within_spread_count: {res.within_spread_count}",
        f"accepted: {'yes' if report.accepted else 'no'}",
    ]
    if not res.converged:
        lines.append(f"note: optimizer failure - {res.message}")
    return "\n".join(lines) + "\n"


def render_machine(report: Report) -> str:
    res = report.result
    p = res.params
    scalars = [
        ("dataset", report.dataset_id),
        ("method", report.method),
        ("seed", "" if report.seed is None else report.seed),
        ("config_hash", report.config_digest),
        ("v0", repr(p.v0)),
        ("vbar", repr(p.vbar)),
        ("eta", repr(p.eta)),
        ("rho", repr(p.rho)),
        ("a", repr(p.a)),
        ("objective", repr(res.objective)),
        ("avg_abs_distance", repr(res.avg_abs_distance)),
        ("mean_half_spread", repr(report.mean_half_spread())),
        ("within_spread_count", res.within_spread_count),
        ("n_options", len(res.per_option)),
        ("accepted", "true" if report.accepted else "false"),
        ("converged", "true" if res.converged else "false"),
        ("evaluations", res.evaluations),
    ]
    if not res.converged:
        scalars.append(("note", res.message))
    lines = [f"{key}={value}" for key, value in scalars]
    lines.append("id,mid,model,abs_diff,within_spread")
    for i, row in enumerate(res.per_option, start=1):
        lines.append(f"{i},{row.quote.mid!r},{row.model_price!r},"
                     f"{row.abs_difference!r},"
                     f"{'true' if row.within_spread else 'false'}")
    return "\n".join(lines) + "\n"
