"""Generalized discrete Orlicz-Morrey (Orlicz-Morrey-s) quasi-norms of real sequences."""

from .engine import (
    NormResult,
    coordinate_bound_check,
    geometric_closed_form,
    geometric_partial_closed_form,
    global_norm,
    modular,
    window_norm,
)
from .errors import ConfigError, DomainError, NonConvergenceError
from .report import ValidationReport, Violation
from .sequences import FiniteSequence, Window, add, geometric_example, scale, window_slice
from .weights import WeightSpec, validate_weight, weight_eval
from .young import (
    SamplingGrid,
    SYoungSpec,
    check_ratio_monotone,
    check_scaling_inequality,
    evaluate,
    inverse,
    validate_s_young,
)

__version__ = "0.1.0"

__all__ = [
    "ConfigError",
    "DomainError",
    "FiniteSequence",
    "NonConvergenceError",
    "NormResult",
    "SYoungSpec",
    "SamplingGrid",
    "ValidationReport",
    "Violation",
    "WeightSpec",
    "Window",
    "add",
    "check_ratio_monotone",
    "check_scaling_inequality",
    "coordinate_bound_check",
    "evaluate",
    "geometric_closed_form",
    "geometric_example",
    "geometric_partial_closed_form",
    "global_norm",
    "inverse",
    "modular",
    "scale",
    "validate_s_young",
    "validate_weight",
    "weight_eval",
    "window_norm",
    "window_slice",
]
