"""European call pricing via characteristic-function inversion (lognormal
and Heston models) and Heston calibration to market option quotes."""

from .calibrate import (CalibrationConfig, CalibrationResult, DEFAULT_LB,
                        DEFAULT_UB, DEFAULT_X0, MarketQuote, OptVector,
                        QuoteFit, acceptance_check, calibrate_global,
                        calibrate_local, objective, optvector_from_params,
                        params_from_optvector)
from .charfn import (BsmParams, HestonParams, cf_bsm, cf_heston,
                     cf_heston_gatheral_exponent)
from .data import (DATASET_IDS, builtin_dataset, parse_quotes,
                   serialize_quotes)
from .errors import (DegenerateCf, DegenerateParams, EmptyFile,
                     HestonFitError, NumericOverflow, OutOfRange, ParseError,
                     QuadratureFailure)
from .inversion import cdf_from_cf, pi1, pi2
from .pricer import (OptionSpec, PriceBreakdown, price_call_bsm,
                     price_call_heston, price_calls_heston)
from .quadrature import QuadratureConfig
from .report import Report, config_hash, render_machine, render_text

__version__ = "0.1.0"

__all__ = [
    "BsmParams", "CalibrationConfig", "CalibrationResult", "DATASET_IDS",
    "DEFAULT_LB", "DEFAULT_UB", "DEFAULT_X0", "DegenerateCf",
    "DegenerateParams", "EmptyFile", "HestonFitError", "HestonParams",
    "MarketQuote", "NumericOverflow", "OptVector", "OptionSpec",
    "OutOfRange", "ParseError", "PriceBreakdown", "QuadratureConfig",
    "QuadratureFailure", "QuoteFit", "Report", "acceptance_check",
    "builtin_dataset", "calibrate_global", "calibrate_local", "cdf_from_cf",
    "cf_bsm", "cf_heston", "cf_heston_gatheral_exponent", "config_hash",
    "objective", "optvector_from_params", "params_from_optvector",
    "parse_quotes", "pi1", "pi2", "price_call_bsm", "price_call_heston",
    "price_calls_heston", "render_machine", "render_text",
    "serialize_quotes",
]
