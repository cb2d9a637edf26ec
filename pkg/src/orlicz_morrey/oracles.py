"""Brute-force reference computations used to cross-check the engine.

``grid_window_norm`` never bisects: it scans a logarithmic grid of scales,
keeps the cell where the modular crosses 1 and rescans that cell with a
fresh grid until the cell is narrow enough.  It evaluates the modular from
scratch rather than through :mod:`.engine`.
"""

from __future__ import annotations

import numpy as np

from .engine import DEFAULT_TOL, solve_rows
from .sequences import FiniteSequence, Window, window_slice
from .weights import WeightSpec, weight_eval
from .young import SYoungSpec


def _rho(entries: np.ndarray, factor: float, f: SYoungSpec, b: np.ndarray) -> np.ndarray:
    with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
        return factor * np.sum(f(entries[None, :] / b[:, None]), axis=1)


def grid_window_norm(
    x: FiniteSequence,
    w: Window,
    f: SYoungSpec,
    wt: WeightSpec,
    rtol: float = 1e-7,
    points: int = 1001,
    decades: tuple[float, float] = (-20.0, 40.0),
) -> float:
    """Smallest grid scale b with modular(b) <= 1, refined to relative width ``rtol``."""
    entries = np.abs(window_slice(x, w))
    entries = entries[entries > 0]
    if entries.size == 0:
        return 0.0
    factor = weight_eval(wt, w.size) / w.size
    peak = float(entries.max())
    lo_exp, hi_exp = np.log10(peak) + decades[0], np.log10(peak) + decades[1]
    grid = np.logspace(lo_exp, hi_exp, points)
    inside = _rho(entries, factor, f, grid) <= 1.0
    if inside[0] or not inside[-1]:
        raise RuntimeError("grid does not bracket the window norm")
    while True:
        j = int(np.argmax(inside))
        lo, hi = grid[j - 1], grid[j]
        if (hi - lo) <= rtol * hi:
            return float(hi)
        grid = np.linspace(lo, hi, points)
        inside = _rho(entries, factor, f, grid) <= 1.0
        inside[0], inside[-1] = False, True


def grid_centered_sup(x: FiniteSequence, f: SYoungSpec, wt: WeightSpec, max_half_width: int, rtol: float = 1e-9) -> float:
    """sup over N <= max_half_width of the grid norm of the window centred at 0."""
    return max(grid_window_norm(x, Window(0, n), f, wt, rtol=rtol) for n in range(max_half_width + 1))


def brute_force_global_norm(
    x: FiniteSequence, f: SYoungSpec, wt: WeightSpec, tol: float = DEFAULT_TOL
) -> tuple[float, Window]:
    """Maximum window norm over an enlarged window set.

    Centres range over the support hull widened by twice its width on each
    side and half-widths up to three times the width; every window is solved.
    """
    hull = x.support_hull()
    if hull is None:
        return 0.0, Window(0, 0)
    lo, hi = hull
    W = hi - lo + 1
    ms = np.arange(lo - 2 * W, hi + 2 * W + 1)
    Ns = np.arange(0, 3 * W + 1)
    best, at = -1.0, Window(0, 0)
    for n in Ns:
        rows = np.stack([np.abs(window_slice(x, Window(int(m), int(n)))) for m in ms])
        factors = np.full(ms.size, weight_eval(wt, 2 * int(n) + 1) / (2 * int(n) + 1))
        vals, _ = solve_rows(rows, factors, f, tol)
        j = int(np.argmax(vals))
        if vals[j] > best:
            best, at = float(vals[j]), Window(int(ms[j]), int(n))
    return best, at
