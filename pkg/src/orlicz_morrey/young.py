"""s-Young functions: evaluation, generalized inverse and sampled validators.

Three parametric families are built in:

* ``power``          Phi(t) = t**p
* ``exp_minus_one``  Phi(t) = exp(t) - 1
* ``power_log``      Phi(t) = t**p * log(1 + t)

A family is s-convex for every declared ``s <= min(p, 1)`` (``s <= 1`` for
``exp_minus_one``).  The argument: write Phi(t) = G(t**s).  For these families
G is convex, nondecreasing and G(0) = 0, and for a**s + b**s = 1

    Phi(a x + b y) = G((a x + b y)**s) <= G(a**s x**s + b**s y**s)
                   <= a**s G(x**s) + b**s G(y**s).

For ``power`` G(u) = u**(p/s) is convex iff p >= s; for ``power_log``
G(u) = u**(p/s) log(1 + u**(1/s)) has G'' > 0 when p/s >= 1 and 1/s >= 1.
A spec declaring a larger ``s`` can still be constructed; it is reported by
:func:`validate_s_young` and refused by :meth:`SYoungSpec.require_admissible`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

import numpy as np

from .errors import DomainError
from .report import ValidationReport

FAMILIES = ("power", "exp_minus_one", "power_log")

INVERSE_RTOL = 1e-12
SLACK = 1e-12
GROWTH_THRESHOLD = 1e6


@dataclass(frozen=True)
class SYoungSpec:
    family: str
    s: float = 1.0
    p: float | None = None

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise DomainError(f"unknown s-Young family {self.family!r}")
        s = float(self.s)
        if not (0.0 < s <= 1.0):
            raise DomainError(f"s out of (0,1]: {self.s}")
        object.__setattr__(self, "s", s)
        if self.family == "exp_minus_one":
            if self.p is not None:
                raise DomainError("exp_minus_one takes no exponent p")
        else:
            if self.p is None:
                raise DomainError(f"family {self.family!r} requires an exponent p")
            p = float(self.p)
            if not (math.isfinite(p) and p > 0.0):
                raise DomainError(f"exponent p must be a positive finite number, got {self.p}")
            object.__setattr__(self, "p", p)

    @property
    def max_s(self) -> float:
        """Largest s for which the family is provably s-convex."""
        return 1.0 if self.p is None else min(self.p, 1.0)

    @property
    def admissible(self) -> bool:
        return self.s <= self.max_s

    def require_admissible(self) -> SYoungSpec:
        if not self.admissible:
            raise DomainError(
                f"declared s={self.s} exceeds min(p, 1)={self.max_s} for family {self.family!r}"
            )
        return self

    def with_s(self, s: float) -> SYoungSpec:
        return SYoungSpec(self.family, s, self.p)

    def __call__(self, t):
        """Vectorized Phi on nonnegative input; no domain checks."""
        t = np.asarray(t, dtype=float)
        with np.errstate(over="ignore", invalid="ignore"):
            if self.family == "power":
                out = np.power(t, self.p)
            elif self.family == "exp_minus_one":
                out = np.expm1(t)
            else:
                out = np.power(t, self.p) * np.log1p(t)
        # 0 * inf for power_log at t = inf
        return np.where(np.isnan(out) & np.isinf(t), np.inf, out)

    def to_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {"family": self.family}
        if self.p is not None:
            d["p"] = self.p
        d["s"] = self.s
        return d

    @classmethod
    def from_dict(cls, d: dict[str, Any], s: float | None = None) -> SYoungSpec:
        """Parse ``{"family": ..., "p": ..., "s": ...}``; an explicit ``s`` overrides the document."""
        if not isinstance(d, dict) or "family" not in d:
            raise DomainError("s-Young spec must be an object with a 'family' field")
        extra = set(d) - {"family", "p", "s"}
        if extra:
            raise DomainError(f"unexpected s-Young spec fields: {sorted(extra)}")
        if s is None:
            s = d.get("s")
        if s is None:
            raise DomainError("s-Young spec is missing 's'")
        return cls(d["family"], _number(s, "s"), None if d.get("p") is None else _number(d["p"], "p"))


def _number(v: Any, name: str) -> float:
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise DomainError(f"{name} must be a number, got {v!r}")
    v = float(v)
    if not math.isfinite(v):
        raise DomainError(f"{name} must be finite")
    return v


def evaluate(f: SYoungSpec, t: float) -> float:
    t = float(t)
    if not t >= 0.0:
        raise DomainError(f"Phi is defined on [0, inf), got t={t}")
    if t == 0.0:
        return 0.0
    return float(f(t))


def inverse(f: SYoungSpec, x: float, rtol: float = INVERSE_RTOL) -> float:
    """Generalized inverse ``inf{r >= 0 : Phi(r) > x}``.

    Closed forms for ``power`` and ``exp_minus_one``; monotone bisection
    otherwise, returning the lower bracket end so that ``Phi(result) <= x``.
    """
    x = float(x)
    if not x >= 0.0:
        raise DomainError(f"inverse is defined on [0, inf), got x={x}")
    if x == 0.0:
        return 0.0
    if math.isinf(x):
        return math.inf
    if f.family == "power":
        return x ** (1.0 / f.p)
    if f.family == "exp_minus_one":
        return math.log1p(x)

    lo, hi = 0.0, 1.0
    while float(f(hi)) <= x:
        lo, hi = hi, 2.0 * hi
    while hi - lo > rtol * hi:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if float(f(mid)) > x:
            hi = mid
        else:
            lo = mid
    return lo


@dataclass(frozen=True)
class SamplingGrid:
    """Finite sample sets for :func:`validate_s_young`.

    ``pairs`` defaults to every ordered pair drawn from ``t``.
    """

    t: tuple[float, ...] = field(default_factory=lambda: default_t_grid())
    a: tuple[float, ...] = tuple(float(v) for v in np.linspace(0.0, 1.0, 21))
    pairs: tuple[tuple[float, float], ...] | None = None

    def pair_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        if self.pairs is not None:
            arr = np.asarray(self.pairs, dtype=float).reshape(-1, 2)
            return arr[:, 0], arr[:, 1]
        t = np.asarray(self.t, dtype=float)
        xx, yy = np.meshgrid(t, t, indexing="ij")
        return xx.ravel(), yy.ravel()


def default_t_grid() -> tuple[float, ...]:
    pts = np.concatenate([[0.0, 0.25, 0.5, 1.0, 2.0, 3.0, 4.0], np.logspace(-3, 2, 21)])
    return tuple(float(v) for v in np.unique(pts))


def _growth_ok(f: SYoungSpec) -> tuple[bool, float, float]:
    # doubling ladder up to ~1e300; a Phi that never clears the threshold is flagged
    t = 1.0
    val = float(f(t))
    while val <= GROWTH_THRESHOLD and t < 1e300:
        t *= 2.0
        val = float(f(t))
    return val > GROWTH_THRESHOLD, t, val


def validate_s_young(f: SYoungSpec, grid: SamplingGrid | None = None) -> ValidationReport:
    """Check the s-Young axioms of ``f`` against its declared ``s`` on a sample grid."""
    grid = grid or SamplingGrid()
    report = ValidationReport()
    s = f.s

    phi0 = float(f(0.0))
    if phi0 != 0.0:
        report.add("zero_at_origin", {"t": 0.0}, phi0, 0.0)

    t = np.unique(np.asarray(grid.t, dtype=float))
    if np.any(t < 0):
        raise DomainError("sample points must be nonnegative")
    vals = f(t)
    for ti, vi in zip(t, vals):
        if ti > 0 and not vi > 0:
            report.add("positive", {"t": float(ti)}, vi, 0.0)
    for i in range(len(t) - 1):
        if vals[i] > vals[i + 1] + SLACK * max(1.0, abs(vals[i + 1])):
            report.add("nondecreasing", {"t1": float(t[i]), "t2": float(t[i + 1])}, vals[i], vals[i + 1])

    ok, t_top, v_top = _growth_ok(f)
    if not ok:
        report.add("divergent", {"t": t_top}, v_top, GROWTH_THRESHOLD)

    x, y = grid.pair_arrays()
    a = np.asarray(grid.a, dtype=float)
    if np.any((a < 0) | (a > 1)):
        raise DomainError("convex-combination weights must lie in [0, 1]")
    b = np.clip(1.0 - a**s, 0.0, None) ** (1.0 / s)
    A, X = np.meshgrid(a, x, indexing="ij")
    B, Y = np.meshgrid(b, y, indexing="ij")
    lhs = f(A * X + B * Y)
    rhs = A**s * f(X) + B**s * f(Y)
    bad = ~(lhs <= rhs + SLACK * np.maximum(1.0, np.abs(rhs)))
    for i, j in zip(*np.nonzero(bad)):
        report.add(
            "s_convexity",
            {"x": float(X[i, j]), "y": float(Y[i, j]), "a": float(A[i, j]), "b": float(B[i, j]), "s": s},
            lhs[i, j],
            rhs[i, j],
        )
    return report


def check_scaling_inequality(f: SYoungSpec, samples: Iterable[tuple[float, float]]) -> ValidationReport:
    """Phi(a t) <= a**s Phi(t) for each sample ``(a, t)`` with a in [0, 1]."""
    report = ValidationReport()
    for a, t in samples:
        a, t = float(a), float(t)
        if not (0.0 <= a <= 1.0):
            raise DomainError(f"scale factor must lie in [0, 1], got {a}")
        if not t >= 0.0:
            raise DomainError(f"t must be nonnegative, got {t}")
        lhs = float(f(a * t))
        rhs = a**f.s * float(f(t))
        if not lhs <= rhs + SLACK * max(1.0, abs(rhs)):
            report.add("scaling", {"a": a, "t": t}, lhs, rhs)
    return report


def check_ratio_monotone(f: SYoungSpec, samples: Sequence[float]) -> ValidationReport:
    """Phi(t) / t**s is nondecreasing over increasing positive samples."""
    t = np.asarray(samples, dtype=float)
    if np.any(~(t > 0)):
        raise DomainError("ratio samples must be positive")
    if np.any(np.diff(t) <= 0):
        raise DomainError("ratio samples must be strictly increasing")
    omega = f(t) / t**f.s
    report = ValidationReport()
    for i in range(len(t) - 1):
        if not omega[i] <= omega[i + 1] + SLACK * max(1.0, abs(omega[i + 1])):
            report.add("ratio_monotone", {"t1": float(t[i]), "t2": float(t[i + 1])}, omega[i], omega[i + 1])
    return report
