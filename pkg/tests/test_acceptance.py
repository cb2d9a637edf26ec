"""Acceptance criteria for the primary component.

Each test records one PASS/FAIL line; the lines are repeated in the
terminal summary of every pytest run.  Run just this module with

    pytest tests/test_acceptance.py -v
"""

import math
import time

import pytest

from orlicz_morrey import (
    FiniteSequence,
    SYoungSpec,
    WeightSpec,
    Window,
    geometric_closed_form,
    geometric_example,
    geometric_partial_closed_form,
    global_norm,
    modular,
    window_norm,
)
from orlicz_morrey.properties import run_check

from conftest import record

SEED = 20261018
IDENTITY = WeightSpec("identity")


def _check(number, name, trials, label):
    rec = run_check(name, trials, seed=SEED)
    record(number, rec.passed, f"{label}: {rec.trials} trials, failures={rec.details['failures']}")
    assert rec.passed, rec.counterexample
    return rec


def test_01_geometric_closed_form():
    worst, slowest, ok = 0.0, 0.0, True
    for D in (1.5, 2.0, 5.0):
        for p in (0.5, 1.0, 2.0):
            f = SYoungSpec("power", min(p, 1.0), p)
            start = time.perf_counter()
            value = global_norm(geometric_example(D, p, 64), f, IDENTITY).value
            slowest = max(slowest, time.perf_counter() - start)
            err = abs(value - geometric_closed_form(D, p))
            worst = max(worst, err)
            ok &= err <= 1e-6
    record(1, ok and slowest < 1.0, f"closed form on 3x3 (D, p) grid, max error {worst:.2e}, slowest case {slowest:.2f}s")
    assert ok
    assert slowest < 1.0


def test_02_partial_sum_formula():
    f = SYoungSpec("power", 1.0, 1.0)
    x = geometric_example(2.0, 1.0, 64)
    errs = [abs(window_norm(x, Window(0, N), f, IDENTITY) - geometric_partial_closed_form(2.0, 1.0, N)) for N in (0, 1, 5, 10)]
    pinned = abs(window_norm(x, Window(0, 10), f, IDENTITY) - 1.4990234375)
    ok = max(errs) <= 1e-9 and pinned <= 1e-9
    record(2, ok, f"partial sums N in {{0,1,5,10}}, max error {max(errs):.2e}")
    assert ok


def test_03_counterexample_norms():
    rec = run_check("counterexample", 1, seed=SEED)
    d = rec.details
    e, o = d["engine"], d["oracle"]
    ok = (
        rec.passed
        and abs(e["norm_x"] - 1.0) <= 1e-6
        and abs(e["norm_sum"] - 2.0) <= 1e-6
        and abs(o["norm_sum"] - 2.0) <= 1e-6
        and d["discrepancy"] is True
    )
    record(
        3,
        ok,
        f"||x|| = {e['norm_x']:.9f}, ||x+x|| = {e['norm_sum']:.9f} (oracle {o['norm_sum']:.9f}); "
        f"DISCREPANCY: claimed ||x+y|| = {d['claimed']['norm_sum']:g}, homogeneity gives {d['homogeneity_prediction']:.6f}",
    )
    assert ok


def test_04_homogeneity():
    _check(4, "homogeneity", 200, "homogeneity")


def test_05_quasi_triangle():
    rec = run_check("quasi_triangle", 500, seed=SEED)
    d = rec.details
    ok = rec.passed and 1.0 - 1e-12 <= d["C_min"] and d["C_max"] < 2.0
    record(5, ok, f"quasi-triangle: 500 pairs, C in [{d['C_min']:.4f}, {d['C_max']:.4f}], failures={d['failures']}")
    assert ok, rec.counterexample


def test_06_triangle_at_s1():
    rec = _check(6, "triangle_s1", 500, "plain triangle inequality at s = 1")
    assert rec.details["max_actual_over_sum"] <= 1.0 + 1e-9


def test_07_window_lemmas():
    # explicit boundary instance: window norm exactly 1
    f = SYoungSpec("power", 1.0, 2.0)
    x = FiniteSequence(0, (0.6, 0.0, 0.8))
    w = Window(1, 1)
    boundary_ok = abs(window_norm(x, w, f, IDENTITY) - 1.0) <= 1e-12 and abs(modular(x, w, 1.0, f, IDENTITY) - 1.0) <= 1e-12
    rec = run_check("window_lemmas", 500, seed=SEED)
    d = rec.details
    both_ways = d["inside_unit_ball"] > 0 and d["outside_unit_ball"] > 0 and d["boundary"] > 0 and d["zero_norm"] > 0
    ok = rec.passed and boundary_ok and both_ways
    record(
        7,
        ok,
        f"window lemmas: 500 trials, inside={d['inside_unit_ball']} outside={d['outside_unit_ball']} "
        f"boundary={d['boundary']} zero={d['zero_norm']}, failures={d['failures']}",
    )
    assert ok, rec.counterexample


def test_08_zero_characterization():
    rec = _check(8, "zero_characterization", 500, "zero characterization")
    assert rec.details["empty_windows"] > 0 and rec.details["nonempty_windows"] > 0


def test_09_inverse_sandwich():
    rec = _check(9, "inverse_sandwich", 300, "inverse sandwich, 100 t per family")
    assert rec.details["per_family"] == {"power": 100, "exp_minus_one": 100, "power_log": 100}


def test_10_coordinate_bound():
    _check(10, "coordinate_bound", 200, "single-coordinate bound")


def test_11_oracle_equivalence():
    grid = run_check("grid_oracle", 100, seed=SEED)
    brute = run_check("window_dominance", 100, seed=SEED)
    ok = grid.passed and brute.passed and grid.details["max_relative_error"] <= 1e-4
    record(
        11,
        ok,
        f"grid oracle max rel. error {grid.details['max_relative_error']:.1e} (100), "
        f"brute-force sweep failures={brute.details['failures']} (100)",
    )
    assert ok, grid.counterexample or brute.counterexample
