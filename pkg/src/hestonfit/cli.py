"""Command-line interface: price single calls, calibrate to quote sets.

Exit codes: 0 success, 1 numeric or optimizer failure, 2 usage errors.
"""

import argparse
import sys

from .calibrate import (CalibrationConfig, OptVector, calibrate_global,
                        calibrate_local)
from .charfn import BsmParams, HestonParams
from .data import DATASET_IDS, builtin_dataset, parse_quotes
from .errors import EmptyFile, HestonFitError, ParseError
from .pricer import OptionSpec, price_call_bsm, price_call_heston
from .report import Report, config_hash, render_machine, render_text
from .quadrature import QuadratureConfig


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hestonfit",
        description="Price European calls and calibrate the Heston model "
                    "to market quotes.")
    sub = parser.add_subparsers(dest="command", required=True)

    price = sub.add_parser("price", help="price a single European call")
    model = price.add_subparsers(dest="model", required=True)

    bsm = model.add_parser("bsm", help="lognormal (constant volatility) model")
    for flag in ("--s0", "--sigma", "--r", "--t", "--k"):
        bsm.add_argument(flag, type=float, required=True)

    heston = model.add_parser("heston", help="stochastic volatility model")
    for flag in ("--s0", "--v0", "--vbar", "--a", "--eta", "--rho",
                 "--r", "--t", "--k"):
        heston.add_argument(flag, type=float, required=True)

    cal = sub.add_parser("calibrate", help="fit Heston parameters to quotes")
    cal.add_argument("--data", required=True,
                     help=f"quote file path or one of {', '.join(DATASET_IDS)}")
    cal.add_argument("--method", required=True, choices=("local", "global"))
    cal.add_argument("--seed", type=int, help="RNG seed (required for global)")
    cal.add_argument("--x0", type=float, nargs=5,
                     metavar=("V0", "VBAR", "ETA", "RHO", "SLACK"),
                     help="initial optimizer vector")
    cal.add_argument("--bounds", type=float, nargs=10,
                     help="lower then upper bounds, five values each")
    cal.add_argument("--max-evals", type=int, dest="max_evals",
                     help="objective evaluation cap (global) or "
                          "iteration cap (local)")
    cal.add_argument("--out", help="also write a machine-readable report here")
    return parser


def _run_price(args) -> int:
    q = QuadratureConfig()
    if args.model == "bsm":
        breakdown = price_call_bsm(
            BsmParams(s0=args.s0, sigma=args.sigma, r=args.r, t=args.t),
            args.k, q)
    else:
        breakdown = price_call_heston(
            HestonParams(v0=args.v0, vbar=args.vbar, a=args.a,
                         eta=args.eta, rho=args.rho),
            OptionSpec(s0=args.s0, k=args.k, r=args.r, t=args.t), q)
    print(f"price = {breakdown.price:.4f}")
    print(f"pi1 = {breakdown.pi1!r}")
    print(f"pi2 = {breakdown.pi2!r}")
    return 0


def _load_quotes(source: str):
    if source in DATASET_IDS:
        return source, builtin_dataset(source)
    with open(source, encoding="utf-8") as fh:
        return source, parse_quotes(fh)


def _run_calibrate(args) -> int:
    dataset_id, quotes = _load_quotes(args.data)
    kwargs = {"method": args.method, "seed": args.seed,
              "max_iterations": args.max_evals}
    if args.x0:
        kwargs["x0"] = OptVector(*args.x0)
    if args.bounds:
        kwargs["lb"] = OptVector(*args.bounds[:5])
        kwargs["ub"] = OptVector(*args.bounds[5:])
    cfg = CalibrationConfig(**kwargs)
    q = QuadratureConfig()

    run = calibrate_local if args.method == "local" else calibrate_global
    result = run(quotes, cfg, q)
    report = Report(dataset_id=dataset_id, method=args.method, seed=cfg.seed,
                    config_digest=config_hash(cfg, q), result=result)
    sys.stdout.write(render_text(report))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(render_machine(report))
    print(f"elapsed: {result.elapsed:.1f}s", file=sys.stderr)
    return 0 if result.converged else 1


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "price":
            return _run_price(args)
        return _run_calibrate(args)
    except (ParseError, EmptyFile) as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except HestonFitError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
