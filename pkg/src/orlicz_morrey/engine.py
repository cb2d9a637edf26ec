"""Modular, windowed Luxemburg-type norm and the global Orlicz-Morrey-s quasi-norm.

For a window S = {m-N, ..., m+N} the modular at scale b > 0 is

    rho(b) = phi(2N+1) / (2N+1) * sum_{k in S} Phi(|x_k| / b)

and the window norm is inf{b > 0 : rho(b) <= 1}.  rho is continuous and
nonincreasing in b, tends to infinity as b -> 0+ whenever some entry of the
window is nonzero and to 0 as b -> infinity, so the norm is the point where
rho crosses 1; it is found by bracketing followed by bisection.

The global norm is a supremum over all windows.  For finitely supported x
with support hull [lo, hi] it is attained on a finite set:

1. A window centred left of ``lo`` (right of ``hi``) meets the support in a
   subset of what the window with the same N centred at ``lo`` (``hi``)
   meets; the weight factor is equal, so the modular, and the norm, can only
   grow.  Centres outside the hull are dominated.
2. If a window overhangs the hull strictly on both sides, shrinking N by one
   keeps the support sum and does not decrease phi(2N+1)/(2N+1), because
   that ratio is nonincreasing for weights in G_phi.

So only centres in [lo, hi] with N <= max(m - lo, hi - m) are searched.  The
search is further pruned exactly: a window with rho(best) <= 1 has norm at
most ``best`` and is never solved.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any

import numpy as np

from .errors import DomainError, NonConvergenceError
from .report import ValidationReport
from .sequences import FiniteSequence, Window, window_slice
from .weights import WeightSpec, weight_eval
from .young import SYoungSpec, inverse

DEFAULT_TOL = 1e-12
MAX_BRACKET_STEPS = 2000
COORDINATE_SLACK = 1e-9
_CHUNK_ENTRIES = 1 << 20


@dataclass(frozen=True)
class NormResult:
    value: float
    witness: Window
    iterations: int
    residual: float

    def to_dict(self) -> dict[str, Any]:
        return {
            "norm": self.value,
            "witness": self.witness.to_dict(),
            "iterations": self.iterations,
            "residual": self.residual,
        }


def _check_tol(tol: float) -> float:
    tol = float(tol)
    if not (tol > 0 and math.isfinite(tol)):
        raise DomainError(f"tolerance must be positive, got {tol}")
    return tol


def modular(x: FiniteSequence, w: Window, b: float, f: SYoungSpec, wt: WeightSpec) -> float:
    b = float(b)
    if not b > 0:
        raise DomainError(f"scale b must be positive, got {b}")
    vals = np.abs(window_slice(x, w))
    with np.errstate(over="ignore"):
        return float(wt.factor(w.N) * np.sum(f(vals / b)))


def solve_rows(rows: np.ndarray, factors: np.ndarray, f: SYoungSpec, tol: float = DEFAULT_TOL):
    """Window norms for a batch of windows.

    ``rows[i]`` holds the absolute entries of window i (zero padding is
    harmless because Phi(0) = 0) and ``factors[i]`` its weight factor
    phi(2N+1)/(2N+1).  Returns ``(norms, bisection_iterations)``.  Each norm
    is the upper end of the final bracket, so rho(norm) <= 1.
    """
    rows = np.atleast_2d(np.asarray(rows, dtype=float))
    factors = np.asarray(factors, dtype=float).reshape(-1)
    n = rows.shape[0]
    values = np.zeros(n)
    iters = np.zeros(n, dtype=int)
    if n == 0 or rows.shape[1] == 0:
        return values, iters
    peak = rows.max(axis=1)
    live = np.flatnonzero(peak > 0)
    if live.size == 0:
        return values, iters
    R, c = rows[live], factors[live]

    def rho(idx: np.ndarray, b: np.ndarray) -> np.ndarray:
        with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
            return c[idx] * np.sum(f(R[idx] / b[:, None]), axis=1)

    b0 = peak[live]
    lo, hi = b0.copy(), b0.copy()
    start = rho(np.arange(live.size), b0)
    above = ~(start <= 1.0)

    # grow b until rho <= 1
    idx = np.flatnonzero(above)
    steps = 0
    while idx.size:
        if steps >= MAX_BRACKET_STEPS:
            raise NonConvergenceError("bracketing exceeded 2000 doublings; Phi does not vanish at 0")
        with np.errstate(over="ignore"):
            cand = 2.0 * lo[idx]
        done = rho(idx, cand) <= 1.0
        hi[idx[done]] = cand[done]
        lo[idx[~done]] = cand[~done]
        idx = idx[~done]
        steps += 1

    # shrink b until rho > 1
    idx = np.flatnonzero(~above)
    steps = 0
    while idx.size:
        if steps >= MAX_BRACKET_STEPS:
            raise NonConvergenceError("bracketing exceeded 2000 halvings; Phi does not diverge")
        cand = 0.5 * hi[idx]
        done = ~(rho(idx, cand) <= 1.0)
        lo[idx[done]] = cand[done]
        hi[idx[~done]] = cand[~done]
        idx = idx[~done]
        steps += 1

    it = np.zeros(live.size, dtype=int)
    idx = np.flatnonzero(hi - lo > tol * hi)
    while idx.size:
        l, h = lo[idx], hi[idx]
        mid = 0.5 * (l + h)
        inside = rho(idx, mid) <= 1.0
        hi[idx[inside]] = mid[inside]
        lo[idx[~inside]] = mid[~inside]
        it[idx] += 1
        moving = (mid > l) & (mid < h)
        idx = idx[moving & (hi[idx] - lo[idx] > tol * hi[idx])]

    values[live] = hi
    iters[live] = it
    return values, iters


def _window_solve(x: FiniteSequence, w: Window, f: SYoungSpec, wt: WeightSpec, tol: float):
    row = np.abs(window_slice(x, w))
    vals, its = solve_rows(row[None, :], np.atleast_1d(wt.factor(w.N)), f, tol)
    return float(vals[0]), int(its[0])


def window_norm(x: FiniteSequence, w: Window, f: SYoungSpec, wt: WeightSpec, tol: float = DEFAULT_TOL) -> float:
    """inf{b > 0 : rho(b) <= 1} for the window ``w``; exactly 0 on an all-zero window."""
    return _window_solve(x, w, f, wt, _check_tol(tol))[0]


def _gather(a: np.ndarray, i0: np.ndarray, i1: np.ndarray) -> np.ndarray:
    width = int((i1 - i0).max()) + 1
    idx = i0[:, None] + np.arange(width)[None, :]
    padded = np.concatenate([a, np.zeros(width)])
    return np.where(idx <= i1[:, None], padded[idx], 0.0)


def candidate_windows(lo: int, hi: int) -> tuple[np.ndarray, np.ndarray]:
    """Centres and half-widths of the dominating window set for support hull [lo, hi], ordered by (N, m)."""
    W = hi - lo + 1
    NN, M = np.meshgrid(np.arange(W), np.arange(lo, hi + 1), indexing="ij")
    m, N = M.ravel(), NN.ravel()
    keep = ~((m - N < lo) & (m + N > hi))
    return m[keep], N[keep]


def global_norm(x: FiniteSequence, f: SYoungSpec, wt: WeightSpec, tol: float = DEFAULT_TOL) -> NormResult:
    """Supremum of the window norms over every window, with the window attaining it."""
    tol = _check_tol(tol)
    hull = x.support_hull()
    if hull is None:
        return NormResult(0.0, Window(0, 0), 0, 0.0)
    lo, hi = hull
    a = np.abs(x.array[lo - x.offset : hi - x.offset + 1])
    m, N = candidate_windows(lo, hi)
    i0 = np.maximum(m - N, lo) - lo
    i1 = np.minimum(m + N, hi) - lo
    c = np.asarray(wt.factor(N), dtype=float)

    state = {"best": -1.0, "at": -1, "iters": 0}

    def solve(sel: np.ndarray) -> None:
        sel = np.sort(sel)
        width = int((i1[sel] - i0[sel]).max()) + 1
        step = max(1, _CHUNK_ENTRIES // width)
        for start in range(0, sel.size, step):
            part = sel[start : start + step]
            vals, its = solve_rows(_gather(a, i0[part], i1[part]), c[part], f, tol)
            j = int(np.argmax(vals))
            if vals[j] > state["best"]:
                state.update(best=float(vals[j]), at=int(part[j]), iters=int(its[j]))

    W = hi - lo + 1
    centre = lo + (W - 1) // 2
    cover = np.flatnonzero((m == centre) & (N == max(centre - lo, hi - centre)))
    seeds = np.union1d(np.flatnonzero(N == 0), cover)
    solve(seeds)
    pending = np.setdiff1d(np.arange(m.size), seeds)

    while pending.size:
        best = state["best"]
        with np.errstate(over="ignore", invalid="ignore"):
            prefix = np.concatenate([[0.0], np.cumsum(f(a / best))])
            rho = c[pending] * (prefix[i1[pending] + 1] - prefix[i0[pending]])
        over = ~(rho <= 1.0)
        pending, rho = pending[over], rho[over]
        if not pending.size:
            break
        order = np.argsort(-rho, kind="stable")
        batch = pending[order[:256]]
        solve(batch)
        pending = np.setdiff1d(pending, batch)

    k = state["at"]
    witness = Window(int(m[k]), int(N[k]))
    value = state["best"]
    residual = abs(modular(x, witness, value, f, wt) - 1.0)
    return NormResult(value, witness, state["iters"], residual)


def geometric_closed_form(D: float, p: float) -> float:
    """((D+1) / (D(D-1)))**(1/p): the norm of x_k = D**(-(|k|+1)/p) for Phi = t**p, phi = identity."""
    D, p = _check_geometric(D, p)
    return ((D + 1.0) / (D * (D - 1.0))) ** (1.0 / p)


def geometric_partial_closed_form(D: float, p: float, N: int) -> float:
    """Centred window norm of the same sequence at half-width N."""
    D, p = _check_geometric(D, p)
    if isinstance(N, bool) or not isinstance(N, (int, np.integer)) or N < 0:
        raise DomainError(f"N must be a nonnegative integer, got {N!r}")
    denom = D * (D - 1.0)
    return ((D + 1.0) / denom - 2.0 * D ** (-int(N)) / denom) ** (1.0 / p)


def _check_geometric(D: float, p: float) -> tuple[float, float]:
    D, p = float(D), float(p)
    if not D > 1.0:
        raise DomainError(f"D must exceed 1, got {D}")
    if not p > 0.0:
        raise DomainError(f"p must be positive, got {p}")
    return D, p


def coordinate_bound_check(
    x: FiniteSequence,
    f: SYoungSpec,
    wt: WeightSpec,
    norm: float | None = None,
    tol: float = DEFAULT_TOL,
) -> ValidationReport:
    """sup_j |x_j| <= ||x|| * Phi^{-1}(1 / phi(1)), the single-coordinate bound."""
    if norm is None:
        norm = global_norm(x, f, wt, tol).value
    lhs = x.sup_abs()
    rhs = norm * inverse(f, 1.0 / weight_eval(wt, 1))
    report = ValidationReport()
    if not lhs <= rhs + COORDINATE_SLACK:
        report.add("coordinate_bound", {"x": x.to_dict(), "norm": norm}, lhs, rhs)
    return report
