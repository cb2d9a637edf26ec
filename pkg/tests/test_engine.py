import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from orlicz_morrey import (
    DomainError,
    FiniteSequence,
    NonConvergenceError,
    SYoungSpec,
    WeightSpec,
    Window,
    coordinate_bound_check,
    geometric_closed_form,
    geometric_example,
    geometric_partial_closed_form,
    global_norm,
    modular,
    scale,
    window_norm,
)
from orlicz_morrey.engine import candidate_windows, solve_rows
from orlicz_morrey.oracles import brute_force_global_norm, grid_window_norm

from conftest import BUILTIN_WEIGHTS, BUILTIN_YOUNG

small_values = st.lists(
    st.one_of(st.just(0.0), st.floats(min_value=-50, max_value=50, allow_nan=False)), min_size=1, max_size=8
)


def test_modular_examples(square, identity):
    x = FiniteSequence(0, (3.0, 0.0, 4.0))
    assert modular(x, Window(1, 1), 5.0, square, identity) == pytest.approx(1.0)
    assert modular(x, Window(1, 1), 10.0, square, identity) == pytest.approx(0.25)
    assert modular(FiniteSequence.zeros(), Window(0, 3), 1.0, square, identity) == 0.0


def test_modular_rejects_nonpositive_scale(square, identity):
    with pytest.raises(DomainError):
        modular(FiniteSequence(0, (1.0,)), Window(0, 0), 0.0, square, identity)


def test_window_norm_examples(square, identity):
    x = FiniteSequence(0, (3.0, 0.0, 4.0))
    assert window_norm(x, Window(1, 1), square, identity) == pytest.approx(5.0, rel=1e-12)
    assert window_norm(x, Window(1, 0), square, identity) == 0.0
    # weight factor 1/(2N+1) for a constant weight: sum 25 / 3 at scale b
    v = window_norm(x, Window(1, 1), square, WeightSpec("constant", c=1.0))
    assert v == pytest.approx(5.0 / math.sqrt(3.0), rel=1e-12)


def test_global_norm_example(square, identity):
    r = global_norm(FiniteSequence(0, (3.0, 0.0, 4.0)), square, identity)
    assert r.value == pytest.approx(5.0, rel=1e-12)
    assert r.witness.lo <= 0 and r.witness.hi >= 2
    assert r.residual < 1e-10


def test_global_norm_zero(square, identity):
    r = global_norm(FiniteSequence(3, (0.0, 0.0)), square, identity)
    assert r.value == 0.0
    assert r.witness == Window(0, 0)


def test_delta_norm_matches_inverse():
    # a single spike a at phi(1) = 1 has norm a / Phi^{-1}(1)
    f = SYoungSpec("exp_minus_one", 1.0)
    r = global_norm(FiniteSequence.delta(7, 2.0), f, WeightSpec("identity"))
    assert r.value == pytest.approx(2.0 / math.log(2.0), rel=1e-11)
    assert r.witness == Window(7, 0)


@settings(max_examples=40, deadline=None)
@given(
    st.sampled_from(BUILTIN_YOUNG),
    st.sampled_from(BUILTIN_WEIGHTS),
    small_values,
    st.integers(min_value=-3, max_value=3),
    st.integers(min_value=0, max_value=6),
)
def test_window_norm_matches_grid_oracle(f, wt, vals, m, N):
    x = FiniteSequence(-2, tuple(vals))
    w = Window(m, N)
    engine = window_norm(x, w, f, wt)
    oracle = grid_window_norm(x, w, f, wt, rtol=1e-9)
    assert engine == pytest.approx(oracle, rel=1e-8, abs=0)
    if engine > 0:
        assert modular(x, w, engine, f, wt) <= 1.0 + 1e-12
        assert modular(x, w, engine * (1 - 1e-9), f, wt) > 1.0


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(BUILTIN_YOUNG), st.sampled_from(BUILTIN_WEIGHTS), small_values)
def test_global_norm_matches_brute_force(f, wt, vals):
    x = FiniteSequence(1, tuple(vals))
    r = global_norm(x, f, wt)
    bf, _ = brute_force_global_norm(x, f, wt)
    assert r.value == pytest.approx(bf, rel=1e-10, abs=0)
    assert window_norm(x, r.witness, f, wt) == pytest.approx(r.value, rel=1e-12, abs=0)


@settings(max_examples=60, deadline=None)
@given(
    st.sampled_from(BUILTIN_YOUNG),
    st.sampled_from(BUILTIN_WEIGHTS),
    small_values,
    st.lists(st.floats(min_value=1e-3, max_value=1e3), min_size=2, max_size=10),
)
def test_modular_nonincreasing_in_scale(f, wt, vals, bs):
    x = FiniteSequence(0, tuple(vals))
    w = Window(len(vals) // 2, len(vals) // 2)
    rhos = [modular(x, w, b, f, wt) for b in sorted(bs)]
    assert all(a >= b for a, b in zip(rhos, rhos[1:]))


def test_candidate_windows_cover_hull():
    m, N = candidate_windows(0, 4)
    pairs = set(zip(m.tolist(), N.tolist()))
    assert (2, 2) in pairs and (0, 4) in pairs and (4, 4) in pairs
    assert (2, 3) not in pairs
    assert all(mm - nn >= 0 or mm + nn <= 4 for mm, nn in pairs)


@pytest.mark.parametrize("D", [1.5, 2.0, 3.0])
@pytest.mark.parametrize("p", [0.5, 1.0, 2.0])
def test_geometric_partial_sums_match_centred_windows(D, p):
    f = SYoungSpec("power", min(p, 1.0), p)
    x = geometric_example(D, p, 40)
    for N in (0, 1, 5, 10):
        assert window_norm(x, Window(0, N), f, WeightSpec("identity")) == pytest.approx(
            geometric_partial_closed_form(D, p, N), rel=1e-10
        )


def test_partial_closed_form_values():
    assert geometric_partial_closed_form(2.0, 1.0, 0) == pytest.approx(0.5)
    assert geometric_partial_closed_form(2.0, 1.0, 1) == pytest.approx(1.0)
    assert geometric_partial_closed_form(2.0, 1.0, 10) == pytest.approx(1.4990234375, rel=1e-14)
    assert geometric_closed_form(2.0, 1.0) == pytest.approx(1.5)
    assert geometric_closed_form(1.0 + math.sqrt(2.0), 0.5) == pytest.approx(1.0, rel=1e-14)
    with pytest.raises(DomainError):
        geometric_closed_form(1.0, 1.0)
    with pytest.raises(DomainError):
        geometric_partial_closed_form(2.0, 1.0, -1)


def test_homogeneity_exact_power(square, identity):
    x = FiniteSequence(-1, (1.0, -2.0, 0.5))
    n = global_norm(x, square, identity).value
    assert global_norm(scale(-3.0, x), square, identity).value == pytest.approx(3.0 * n, rel=1e-11)


def test_coordinate_bound(square, identity):
    x = FiniteSequence(0, (3.0, 0.0, 4.0))
    assert coordinate_bound_check(x, square, identity).valid
    assert not coordinate_bound_check(x, square, identity, norm=1.0).valid


def test_solver_reports_nonconvergence():
    def stuck(t):
        return np.full_like(t, 5.0)

    with pytest.raises(NonConvergenceError):
        solve_rows(np.array([[1.0]]), np.array([1.0]), stuck)


def test_bad_tolerance(square, identity):
    with pytest.raises(DomainError):
        global_norm(FiniteSequence.delta(0), square, identity, tol=0.0)


def test_wide_support_is_fast(identity):
    rng = np.random.default_rng(7)
    x = FiniteSequence(0, tuple(rng.uniform(-1, 1, 400)))
    f = SYoungSpec("power", 1.0, 1.5)
    r = global_norm(x, f, identity)
    assert r.residual < 1e-9
    assert r.value >= window_norm(x, Window(200, 200), f, identity) * (1 - 1e-12)
