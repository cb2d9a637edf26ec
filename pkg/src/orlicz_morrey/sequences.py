"""Finitely supported two-sided sequences and index windows."""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass
from typing import Any, Iterable

import numpy as np

from .errors import DomainError


@dataclass(frozen=True, eq=False)
class FiniteSequence:
    """Entries ``values[i]`` sit at index ``offset + i``; every other index holds 0.

    Equality is entrywise, so stored leading/trailing zeros do not matter.
    """

    offset: int = 0
    values: tuple[float, ...] = ()

    def __post_init__(self) -> None:
        if isinstance(self.offset, bool) or not isinstance(self.offset, numbers.Integral):
            raise DomainError(f"offset must be an integer, got {self.offset!r}")
        vals = tuple(float(v) for v in self.values)
        if not all(math.isfinite(v) for v in vals):
            raise DomainError("sequence entries must be finite")
        object.__setattr__(self, "offset", int(self.offset))
        object.__setattr__(self, "values", vals)

    @classmethod
    def zeros(cls) -> FiniteSequence:
        return cls(0, ())

    @classmethod
    def delta(cls, k: int, value: float = 1.0) -> FiniteSequence:
        return cls(k, (value,))

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, k: int) -> float:
        i = k - self.offset
        if 0 <= i < len(self.values):
            return self.values[i]
        return 0.0

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=float)

    def support_hull(self) -> tuple[int, int] | None:
        """Smallest ``(lo, hi)`` containing every nonzero entry, or None for the zero sequence."""
        nz = np.flatnonzero(self.array)
        if nz.size == 0:
            return None
        return self.offset + int(nz[0]), self.offset + int(nz[-1])

    def is_zero(self) -> bool:
        return self.support_hull() is None

    def trimmed(self) -> FiniteSequence:
        hull = self.support_hull()
        if hull is None:
            return FiniteSequence.zeros()
        lo, hi = hull
        return FiniteSequence(lo, self.values[lo - self.offset : hi - self.offset + 1])

    def sup_abs(self) -> float:
        return float(np.max(np.abs(self.array))) if self.values else 0.0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteSequence):
            return NotImplemented
        a, b = self.trimmed(), other.trimmed()
        return a.offset == b.offset and a.values == b.values if a.values else not b.values

    def __hash__(self) -> int:
        t = self.trimmed()
        return hash((t.offset, t.values) if t.values else ())

    def __neg__(self) -> FiniteSequence:
        return scale(-1.0, self)

    def __add__(self, other: FiniteSequence) -> FiniteSequence:
        return add(self, other)

    def to_dict(self) -> dict[str, Any]:
        return {"offset": self.offset, "values": list(self.values)}

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> FiniteSequence:
        if not isinstance(d, dict) or set(d) != {"offset", "values"}:
            raise DomainError("sequence document must have exactly the fields 'offset' and 'values'")
        vals = d["values"]
        if not isinstance(vals, list) or any(isinstance(v, bool) or not isinstance(v, (int, float)) for v in vals):
            raise DomainError("'values' must be a list of numbers")
        return cls(d["offset"], tuple(vals))


@dataclass(frozen=True)
class Window:
    """The index set {m-N, ..., m+N}."""

    m: int
    N: int

    def __post_init__(self) -> None:
        for name in ("m", "N"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, numbers.Integral):
                raise DomainError(f"window {name} must be an integer, got {v!r}")
            object.__setattr__(self, name, int(v))
        if self.N < 0:
            raise DomainError(f"window half-width must be nonnegative, got {self.N}")

    @property
    def size(self) -> int:
        return 2 * self.N + 1

    @property
    def lo(self) -> int:
        return self.m - self.N

    @property
    def hi(self) -> int:
        return self.m + self.N

    def indices(self) -> range:
        return range(self.lo, self.hi + 1)

    def to_dict(self) -> dict[str, int]:
        return {"m": self.m, "N": self.N}


def window_slice(x: FiniteSequence, w: Window) -> np.ndarray:
    """``(x[m-N], ..., x[m+N])`` with zero padding outside the stored entries."""
    out = np.zeros(w.size)
    vals = x.array
    start = max(w.lo, x.offset)
    stop = min(w.hi, x.offset + len(vals) - 1)
    if start <= stop:
        out[start - w.lo : stop - w.lo + 1] = vals[start - x.offset : stop - x.offset + 1]
    return out


def scale(a: float, x: FiniteSequence) -> FiniteSequence:
    a = float(a)
    if a == 0.0:
        return FiniteSequence.zeros()
    return FiniteSequence(x.offset, tuple(a * v for v in x.values))


def add(x: FiniteSequence, y: FiniteSequence) -> FiniteSequence:
    if not y.values:
        return x
    if not x.values:
        return y
    lo = min(x.offset, y.offset)
    hi = max(x.offset + len(x) - 1, y.offset + len(y) - 1)
    out = np.zeros(hi - lo + 1)
    out[x.offset - lo : x.offset - lo + len(x)] += x.array
    out[y.offset - lo : y.offset - lo + len(y)] += y.array
    return FiniteSequence(lo, tuple(out))


def from_dense(values: Iterable[float], offset: int = 0) -> FiniteSequence:
    return FiniteSequence(offset, tuple(values))


def geometric_example(D: float, p: float, L: int) -> FiniteSequence:
    """Truncation to |k| <= L of x_k = D ** (-(|k| + 1) / p)."""
    D, p = float(D), float(p)
    if not D > 1.0:
        raise DomainError(f"D must exceed 1, got {D}")
    if not p > 0.0:
        raise DomainError(f"p must be positive, got {p}")
    if isinstance(L, bool) or not isinstance(L, numbers.Integral) or L < 0:
        raise DomainError(f"L must be a nonnegative integer, got {L!r}")
    k = np.arange(-L, L + 1)
    vals = D ** (-(np.abs(k) + 1) / p)
    return FiniteSequence(-int(L), tuple(vals))
