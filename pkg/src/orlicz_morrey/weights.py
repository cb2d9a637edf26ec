"""Weights on the odd integers 1, 3, 5, ... belonging to the class G_phi.

A weight is admissible when it is positive, nondecreasing and ``phi(n)/n`` is
nonincreasing.  The built-in families satisfy this for their documented
parameter ranges; out-of-range parameters can be constructed so that
:func:`validate_weight` has something to report, but
:meth:`WeightSpec.require_admissible` refuses them.
"""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass
from typing import Any

import numpy as np

from .errors import DomainError
from .report import ValidationReport

WEIGHT_FAMILIES = ("identity", "power", "constant")
SLACK = 1e-12


@dataclass(frozen=True)
class WeightSpec:
    family: str = "identity"
    theta: float | None = None
    c: float | None = None

    def __post_init__(self) -> None:
        if self.family not in WEIGHT_FAMILIES:
            raise DomainError(f"unknown weight family {self.family!r}")
        if self.family == "power":
            if self.theta is None or not math.isfinite(float(self.theta)):
                raise DomainError("power weight requires a finite exponent theta")
            object.__setattr__(self, "theta", float(self.theta))
        elif self.theta is not None:
            raise DomainError(f"weight family {self.family!r} takes no theta")
        if self.family == "constant":
            if self.c is None or not (math.isfinite(float(self.c)) and float(self.c) > 0):
                raise DomainError("constant weight requires a positive finite c")
            object.__setattr__(self, "c", float(self.c))
        elif self.c is not None:
            raise DomainError(f"weight family {self.family!r} takes no c")

    @property
    def admissible(self) -> bool:
        return self.family != "power" or 0.0 <= self.theta <= 1.0

    def require_admissible(self) -> WeightSpec:
        if not self.admissible:
            raise DomainError(f"power weight needs theta in [0,1], got {self.theta}")
        return self

    def __call__(self, n):
        """Vectorized phi on odd positive integers; no domain checks."""
        n = np.asarray(n, dtype=float)
        if self.family == "identity":
            return n
        if self.family == "power":
            return n**self.theta
        return np.full_like(n, self.c)

    def factor(self, half_width) -> np.ndarray:
        """phi(2N+1) / (2N+1), the per-window scale of the modular."""
        n = 2 * np.asarray(half_width, dtype=float) + 1
        if self.family == "identity":
            return np.ones_like(n)
        return self(n) / n

    def to_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {"family": self.family}
        if self.theta is not None:
            d["theta"] = self.theta
        if self.c is not None:
            d["c"] = self.c
        return d

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> WeightSpec:
        if not isinstance(d, dict) or "family" not in d:
            raise DomainError("weight spec must be an object with a 'family' field")
        extra = set(d) - {"family", "theta", "c"}
        if extra:
            raise DomainError(f"unexpected weight spec fields: {sorted(extra)}")
        for key in ("theta", "c"):
            v = d.get(key)
            if v is not None and (isinstance(v, bool) or not isinstance(v, (int, float))):
                raise DomainError(f"{key} must be a number, got {v!r}")
        return cls(d["family"], d.get("theta"), d.get("c"))


def _check_odd(n: Any) -> int:
    if isinstance(n, bool) or not isinstance(n, numbers.Integral):
        raise DomainError(f"weight argument must be an integer, got {n!r}")
    n = int(n)
    if n < 1 or n % 2 == 0:
        raise DomainError(f"weight argument must be an odd positive integer, got {n}")
    return n


def weight_eval(w: WeightSpec, n: int) -> float:
    n = _check_odd(n)
    if w.family == "identity":
        return float(n)
    return float(w(n))


def validate_weight(w: WeightSpec, n_max: int) -> ValidationReport:
    """Sampled G_phi membership over n = 1, 3, ..., n_max."""
    n_max = _check_odd(n_max)
    n = np.arange(1, n_max + 1, 2)
    vals = np.asarray(w(n), dtype=float)
    ratio = vals / n
    report = ValidationReport()
    for i, (ni, vi) in enumerate(zip(n, vals)):
        if not vi > 0:
            report.add("positive", {"n": int(ni)}, vi, 0.0)
    for i in range(len(n) - 1):
        if vals[i] > vals[i + 1] + SLACK * abs(vals[i + 1]):
            report.add("nondecreasing", {"n1": int(n[i]), "n2": int(n[i + 1])}, vals[i], vals[i + 1])
        if ratio[i + 1] > ratio[i] + SLACK * abs(ratio[i]):
            report.add("ratio_nonincreasing", {"n1": int(n[i]), "n2": int(n[i + 1])}, ratio[i + 1], ratio[i])
    return report
