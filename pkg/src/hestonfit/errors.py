"""Exception types shared across the pricing and calibration modules."""


class HestonFitError(Exception):
    """Base class for all library errors."""


class DegenerateParams(HestonFitError, ValueError):
    """Parameter set cannot be used (zero variance scale, a <= 0, ...)."""


class NumericOverflow(HestonFitError, ArithmeticError):
    """A characteristic-function exponent left the double-precision range."""


class QuadratureFailure(HestonFitError, ArithmeticError):
    """Adaptive quadrature could not meet tolerance within the subdivision cap."""


class OutOfRange(HestonFitError, ArithmeticError):
    """A probability left [0, 1] by more than the configured tolerance."""


class DegenerateCf(HestonFitError, ArithmeticError):
    """Characteristic function unusable (e.g. vanishing forward value)."""


class ParseError(HestonFitError, ValueError):
    """Quote input could not be parsed; carries the offending line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class EmptyFile(HestonFitError, ValueError):
    """Quote input contained no data rows."""
