"""Executable checks for the crank-parity and colored-partition catalogue."""

from .core import (Check, CheckResult, CheckSkipped, Failure, all_check_ids,
                   get_check, run_check, run_checks, MIN_MEANINGFUL_ORDER)
from .sequences import (a_series, c_series, c54_series, p_series,
                        theta_convolution, theta_convolution_sum,
                        theta_weight_series)
from . import catalogue  # noqa: F401  (populates the registry on import)

__all__ = [
    "Check",
    "CheckResult",
    "CheckSkipped",
    "Failure",
    "all_check_ids",
    "get_check",
    "run_check",
    "run_checks",
    "MIN_MEANINGFUL_ORDER",
    "a_series",
    "c_series",
    "c54_series",
    "p_series",
    "theta_convolution",
    "theta_convolution_sum",
    "theta_weight_series",
]
