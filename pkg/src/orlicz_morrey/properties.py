"""Randomized verification of the quasi-norm axioms and the window lemmas.

Every check draws instances from a generator seeded by ``(seed, crc32(name))``
so a check's outcome does not depend on which other checks run.  Instances
are plain JSON-able dicts; a failing check stores the first failing instance
and :func:`replay` re-evaluates it standalone.
"""

from __future__ import annotations

import math
import zlib
from dataclasses import dataclass, field
from typing import Any, Callable

import numpy as np

from . import oracles
from .engine import global_norm, modular, window_norm, coordinate_bound_check
from .errors import ConfigError
from .sequences import FiniteSequence, Window, add, geometric_example, scale
from .weights import WeightSpec, weight_eval
from .young import SYoungSpec, evaluate, inverse

SLACK = 1e-9
ORACLE_RTOL = 1e-4
MAX_WIDTH = 33
MAGNITUDE = 10.0

CLAIMED_COUNTEREXAMPLE = {"norm_x": 1.0, "norm_y": 1.0, "norm_sum": 4.0}


@dataclass
class CheckRecord:
    name: str
    passed: bool
    trials: int
    counterexample: dict[str, Any] | None = None
    details: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "trials": self.trials,
            "counterexample": self.counterexample,
            "details": self.details,
        }


@dataclass
class PropertyReport:
    seed: int
    checks: list[CheckRecord] = field(default_factory=list)

    @property
    def trial_counts(self) -> dict[str, int]:
        return {c.name: c.trials for c in self.checks}

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> CheckRecord:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict[str, Any]:
        return {
            "seed": self.seed,
            "passed": self.passed,
            "trial_counts": self.trial_counts,
            "checks": [c.to_dict() for c in self.checks],
        }


@dataclass(frozen=True)
class QuasiConstantSample:
    X: float
    Y: float
    C: float
    bound: float
    actual: float

    @classmethod
    def from_norms(cls, X: float, Y: float, actual: float, s: float) -> QuasiConstantSample:
        if X > 0 and Y > 0:
            C = (X**s + Y**s) / (X + Y) ** s
        else:
            C = 1.0
        return cls(X, Y, C, (X**s + Y**s) ** (1.0 / s), actual)


# -- random instances -------------------------------------------------------


def random_young(rng: np.random.Generator, s: float | None = None, convex: bool = False) -> SYoungSpec:
    """Admissible s-Young spec; ``convex`` draws a Young function (p >= 1) at s = 1."""
    if convex:
        s = 1.0
    elif s is None:
        s = float(rng.uniform(0.1, 1.0))
    family = ("power", "exp_minus_one", "power_log")[int(rng.integers(3))]
    if family == "exp_minus_one":
        return SYoungSpec(family, s)
    p = float(rng.uniform(1.0, 3.0)) if convex else float(rng.uniform(s, 3.0))
    return SYoungSpec(family, s, p)


def random_weight(rng: np.random.Generator) -> WeightSpec:
    kind = int(rng.integers(3))
    if kind == 0:
        return WeightSpec("identity")
    if kind == 1:
        return WeightSpec("power", theta=float(rng.uniform(0.0, 1.0)))
    return WeightSpec("constant", c=float(rng.uniform(0.5, 2.0)))


def random_sequence(
    rng: np.random.Generator, max_width: int = MAX_WIDTH, magnitude: float = MAGNITUDE, zero_prob: float = 0.0
) -> FiniteSequence:
    if rng.uniform() < zero_prob:
        return FiniteSequence(int(rng.integers(-5, 6)), (0.0,) * int(rng.integers(0, 4)))
    width = int(rng.integers(1, max_width + 1))
    vals = rng.uniform(0.0, magnitude, width) * rng.choice([-1.0, 1.0], width)
    vals[rng.uniform(size=width) < 0.2] = 0.0
    if not np.any(vals):
        vals[int(rng.integers(width))] = magnitude * float(rng.uniform(0.1, 1.0))
    return FiniteSequence(int(rng.integers(-10, 11)), tuple(vals))


def random_window(rng: np.random.Generator, x: FiniteSequence) -> Window:
    lo, hi = x.offset, x.offset + max(len(x), 1) - 1
    m = int(rng.integers(lo - 3, hi + 4))
    return Window(m, int(rng.integers(0, hi - lo + 3)))


def _specs(inst: dict[str, Any]) -> tuple[SYoungSpec, WeightSpec]:
    return SYoungSpec.from_dict(inst["Phi"]), WeightSpec.from_dict(inst["phi"])


def _seq(d: dict[str, Any]) -> FiniteSequence:
    return FiniteSequence.from_dict(d)


def _draw_specs(rng, overrides, convex=False) -> dict[str, Any]:
    f = overrides.get("young") or random_young(rng, convex=convex)
    wt = overrides.get("weight") or random_weight(rng)
    return {"Phi": f.to_dict(), "phi": wt.to_dict()}


def _close(a: float, b: float, slack: float = SLACK) -> bool:
    return abs(a - b) <= slack * max(1.0, abs(a), abs(b))


# -- checks -----------------------------------------------------------------


def _gen_positivity(rng, i, ov):
    return {"x": random_sequence(rng, zero_prob=0.15).to_dict(), **_draw_specs(rng, ov)}


def _eval_positivity(inst):
    f, wt = _specs(inst)
    x = _seq(inst["x"])
    r = global_norm(x, f, wt)
    ok = r.value >= 0 and ((r.value == 0) == x.is_zero())
    return ok, {"norm": r.value, "zero": x.is_zero()}


def _sum_positivity(infos):
    return {"zero_sequences": sum(i["zero"] for i in infos)}


def _gen_homogeneity(rng, i, ov):
    u = rng.uniform()
    a = 0.0 if u < 0.1 else -1.0 if u < 0.2 else float(rng.uniform(-5.0, 5.0))
    return {"x": random_sequence(rng).to_dict(), "a": a, **_draw_specs(rng, ov)}


def _eval_homogeneity(inst):
    f, wt = _specs(inst)
    x, a = _seq(inst["x"]), inst["a"]
    nx = global_norm(x, f, wt).value
    nax = global_norm(scale(a, x), f, wt).value
    err = abs(nax - abs(a) * nx)
    return err <= SLACK * max(1.0, nx), {"norm_x": nx, "norm_ax": nax, "error": err}


def _gen_pair(rng, i, ov, convex=False):
    u = rng.uniform()
    x = random_sequence(rng)
    y = random_sequence(rng)
    if u < 0.05:
        x = FiniteSequence.zeros()
    elif u < 0.1:
        y = FiniteSequence.zeros()
    elif u < 0.2:
        y = x
    return {"x": x.to_dict(), "y": y.to_dict(), **_draw_specs(rng, ov, convex=convex)}


def _pair_norms(inst):
    f, wt = _specs(inst)
    x, y = _seq(inst["x"]), _seq(inst["y"])
    X = global_norm(x, f, wt).value
    Y = global_norm(y, f, wt).value
    Z = global_norm(add(x, y), f, wt).value
    return f, X, Y, Z


def _eval_quasi_triangle(inst):
    f, X, Y, Z = _pair_norms(inst)
    q = QuasiConstantSample.from_norms(X, Y, Z, f.s)
    ok = Z <= q.bound + SLACK
    loose = 2.0 ** (1.0 / f.s) * (X + Y)
    ok &= Z <= loose + SLACK
    if X > 0 and Y > 0:
        ok &= 1.0 - 1e-12 <= q.C < 2.0
    else:
        ok &= _close(Z, max(X, Y))
    return bool(ok), {"X": X, "Y": Y, "C": q.C, "bound": q.bound, "actual": Z,
                      "both_nonzero": X > 0 and Y > 0, "ratio": Z / q.bound if q.bound > 0 else 0.0}


def _sum_quasi_triangle(infos):
    cs = [i["C"] for i in infos if i["both_nonzero"]]
    return {
        "C_min": min(cs, default=None),
        "C_max": max(cs, default=None),
        "max_actual_over_bound": max((i["ratio"] for i in infos), default=None),
        "degenerate_pairs": sum(not i["both_nonzero"] for i in infos),
    }


def _eval_triangle_s1(inst):
    f, X, Y, Z = _pair_norms(inst)
    ok = Z <= X + Y + SLACK
    return bool(ok), {"X": X, "Y": Y, "actual": Z, "ratio": Z / (X + Y) if X + Y > 0 else 0.0}


def _sum_triangle_s1(infos):
    return {"max_actual_over_sum": max((i["ratio"] for i in infos), default=None)}


def _gen_window_instance(rng, i, ov):
    if i == 0:
        # Pythagorean boundary case: window norm exactly 1
        return {"x": {"offset": 0, "values": [0.6, 0.0, 0.8]}, "window": {"m": 1, "N": 1},
                "target": None, "Phi": SYoungSpec("power", 1.0, 2.0).to_dict(), "phi": {"family": "identity"}}
    x = random_sequence(rng, zero_prob=0.05)
    w = random_window(rng, x)
    u = rng.uniform()
    # target window norm for the rescaled copy; None keeps x as drawn
    target = 1.0 if u < 0.1 else float(rng.uniform(0.5, 1.5)) if u < 0.8 else None
    return {"x": x.to_dict(), "window": w.to_dict(), "target": target, **_draw_specs(rng, ov)}


_B_ANY = np.logspace(-12, 12, 49)
_B_GE1 = np.concatenate([[1.0], np.logspace(0.01, 4, 40)])
_A_ANY = np.logspace(-6, 6, 25)


def _eval_window_lemmas(inst):
    f, wt = _specs(inst)
    x = _seq(inst["x"])
    w = Window(**inst["window"])
    n = window_norm(x, w, f, wt)
    if inst.get("target") is not None and n > 0:
        x = scale(inst["target"] / n, x)
        n = window_norm(x, w, f, wt)
    res: dict[str, Any] = {"norm": n}

    # modular evaluated at the norm stays within the unit ball
    res["modular_at_norm"] = n == 0 or modular(x, w, n, f, wt) <= 1.0 + SLACK

    # unit ball: norm <= 1 iff modular(1) <= 1
    r1 = modular(x, w, 1.0, f, wt)
    ok = True
    if n <= 1.0:
        ok &= r1 <= 1.0 + SLACK
    if r1 <= 1.0:
        ok &= n <= 1.0 + SLACK
    if n > 1.0 + SLACK:
        ok &= r1 > 1.0
    if r1 > 1.0 + SLACK:
        ok &= n > 1.0
    res["unit_ball"] = bool(ok)
    res["inside"] = n <= 1.0

    # zero window: modular <= 1 at every scale iff the norm vanishes
    bs = _B_ANY if n == 0 else np.append(_B_ANY, 0.5 * n)
    all_small = all(modular(x, w, b, f, wt) <= 1.0 for b in bs)
    res["zero_window"] = all_small == (n == 0)

    # scaled ball: modular(b) <= b**-s for all b >= 1 iff norm <= 1
    ok = True
    rb = np.array([modular(x, w, b, f, wt) for b in _B_GE1])
    lim = _B_GE1 ** (-f.s)
    if n <= 1.0:
        ok &= bool(np.all(rb <= lim + SLACK))
    if np.all(rb <= lim):
        ok &= n <= 1.0 + SLACK
    if n > 1.0 + SLACK:
        ok &= bool(np.any(rb > lim))
    res["scaled_ball"] = bool(ok)

    # zero modular: sum Phi(a|x_k|) = 0 for every a > 0 iff norm is 0
    factor = weight_eval(wt, w.size) / w.size
    vals = np.abs(np.array([x[k] for k in w.indices()]))
    with np.errstate(over="ignore"):
        zero_mod = all(factor * float(np.sum(f(a * vals))) == 0.0 for a in _A_ANY)
    res["zero_modular"] = zero_mod == (n == 0)

    lemmas = ("modular_at_norm", "unit_ball", "zero_window", "scaled_ball", "zero_modular")
    return all(res[k] for k in lemmas), res


def _sum_window_lemmas(infos):
    out = {k: all(i[k] for i in infos) for k in ("modular_at_norm", "unit_ball", "zero_window", "scaled_ball", "zero_modular")}
    out["inside_unit_ball"] = sum(i["inside"] for i in infos)
    out["outside_unit_ball"] = sum(not i["inside"] for i in infos)
    out["boundary"] = sum(abs(i["norm"] - 1.0) <= 1e-9 for i in infos)
    out["zero_norm"] = sum(i["norm"] == 0 for i in infos)
    return out


def _gen_zero_char(rng, i, ov):
    x = random_sequence(rng, zero_prob=0.1)
    u = rng.uniform()
    if u < 0.3 and len(x):
        # window strictly left or right of the stored entries
        N = int(rng.integers(0, 5))
        m = x.offset - N - 1 - int(rng.integers(0, 4)) if u < 0.15 else x.offset + len(x) + N + int(rng.integers(0, 4))
        w = Window(m, N)
    else:
        w = random_window(rng, x)
    return {"x": x.to_dict(), "window": w.to_dict(), **_draw_specs(rng, ov)}


def _eval_zero_char(inst):
    f, wt = _specs(inst)
    x = _seq(inst["x"])
    w = Window(**inst["window"])
    n = window_norm(x, w, f, wt)
    empty = not any(x[k] != 0 for k in w.indices())
    ok = (n == 0.0) if empty else (n > 0.0)
    return ok, {"empty": empty, "norm": n}


def _sum_zero_char(infos):
    return {"empty_windows": sum(i["empty"] for i in infos), "nonempty_windows": sum(not i["empty"] for i in infos)}


def _gen_sandwich(rng, i, ov):
    kind = i % 3
    if ov.get("young") is not None:
        f = ov["young"]
    elif kind == 1:
        f = SYoungSpec("exp_minus_one", 1.0)
    else:
        p = float(rng.uniform(0.1, 3.0))
        f = SYoungSpec("power" if kind == 0 else "power_log", min(p, 1.0), p)
    return {"Phi": f.to_dict(), "t": float(10 ** rng.uniform(-6, 2)) if i >= 3 else 0.0}


def _eval_sandwich(inst):
    f = SYoungSpec.from_dict(inst["Phi"])
    t = inst["t"]
    inv = inverse(f, t)
    lower = evaluate(f, inv)
    upper = inverse(f, evaluate(f, t))
    ok = lower <= t + SLACK and t <= upper + SLACK
    # monotone inverse on a nearby increasing pair
    ok &= inverse(f, t) <= inverse(f, 1.5 * t + 1e-3)
    return bool(ok), {"family": f.family, "lower": lower, "upper": upper}


def _sum_sandwich(infos):
    out: dict[str, int] = {}
    for i in infos:
        out[i["family"]] = out.get(i["family"], 0) + 1
    return {"per_family": out}


def _gen_coordinate(rng, i, ov):
    return {"x": random_sequence(rng, zero_prob=0.05).to_dict(), **_draw_specs(rng, ov)}


def _eval_coordinate(inst):
    f, wt = _specs(inst)
    x = _seq(inst["x"])
    rep = coordinate_bound_check(x, f, wt)
    return rep.valid, {"violations": [v.to_dict() for v in rep.violations]}


def _gen_grid_oracle(rng, i, ov):
    x = random_sequence(rng)
    lo, hi = x.support_hull()
    w = Window(int(rng.integers(lo, hi + 1)), int(rng.integers(0, hi - lo + 2)))
    return {"x": x.to_dict(), "window": w.to_dict(), **_draw_specs(rng, ov)}


def _eval_grid_oracle(inst):
    f, wt = _specs(inst)
    x = _seq(inst["x"])
    w = Window(**inst["window"])
    n = window_norm(x, w, f, wt)
    g = oracles.grid_window_norm(x, w, f, wt)
    rel = abs(n - g) / max(abs(g), 1e-300) if g > 0 else abs(n)
    return rel <= ORACLE_RTOL, {"engine": n, "oracle": g, "relative_error": rel}


def _sum_rel(infos):
    return {"max_relative_error": max((i["relative_error"] for i in infos), default=None)}


def _gen_dominance(rng, i, ov):
    return {"x": random_sequence(rng, max_width=10).to_dict(), **_draw_specs(rng, ov)}


def _eval_dominance(inst):
    f, wt = _specs(inst)
    x = _seq(inst["x"])
    g = global_norm(x, f, wt)
    bf, at = oracles.brute_force_global_norm(x, f, wt)
    ok = bf <= g.value + SLACK * max(1.0, g.value) and _close(bf, g.value)
    return ok, {"engine": g.value, "brute_force": bf, "engine_witness": g.witness.to_dict(), "brute_force_witness": at.to_dict()}


def reproduce_counterexample(L: int = 80) -> dict[str, Any]:
    """Norms of x, y = x and x + y for x_k = (1+sqrt 2)**(-2(|k|+1)) at s = p = 1/2.

    Engine values are compared with the b-grid oracle and with the values
    the claimed values (norm of x + y equal to 4).  Homogeneity forces
    ||x + x|| = 2 ||x||, so the stated 4 is flagged as a discrepancy.
    """
    D = 1.0 + math.sqrt(2.0)
    f = SYoungSpec("power", 0.5, 0.5)
    wt = WeightSpec("identity")
    x = geometric_example(D, 0.5, L)
    xy = add(x, x)
    engine = {"norm_x": global_norm(x, f, wt).value}
    engine["norm_y"] = engine["norm_x"]
    engine["norm_sum"] = global_norm(xy, f, wt).value
    oracle = {"norm_x": oracles.grid_centered_sup(x, f, wt, L)}
    oracle["norm_y"] = oracle["norm_x"]
    oracle["norm_sum"] = oracles.grid_centered_sup(xy, f, wt, L)
    discrepancy = abs(CLAIMED_COUNTEREXAMPLE["norm_sum"] - oracle["norm_sum"]) > 1e-6
    return {
        "D": D,
        "p": 0.5,
        "s": 0.5,
        "L": L,
        "engine": engine,
        "oracle": oracle,
        "claimed": dict(CLAIMED_COUNTEREXAMPLE),
        "homogeneity_prediction": 2.0 * oracle["norm_x"],
        "discrepancy": discrepancy,
        "note": (
            "x + y = 2x, so ||x + y|| = 2 ||x|| = 2 = ||x|| + ||y||: equality, not a violation; "
            "the claimed value 4 is inconsistent with homogeneity"
            if discrepancy
            else "claimed value reproduced"
        ),
    }


def _gen_counterexample(rng, i, ov):
    return {"L": 80}


def _eval_counterexample(inst):
    cmp = reproduce_counterexample(inst["L"])
    e, o = cmp["engine"], cmp["oracle"]
    ok = abs(e["norm_x"] - 1.0) <= 1e-6 and abs(e["norm_sum"] - 2.0) <= 1e-6
    ok &= abs(e["norm_x"] - o["norm_x"]) <= 1e-6 and abs(e["norm_sum"] - o["norm_sum"]) <= 1e-6
    return bool(ok), cmp


def _gen_violation_search(rng, i, ov):
    if i == 0:
        f = SYoungSpec("power", 0.5, 0.5)
        return {"x": {"offset": 0, "values": [1.0]}, "y": {"offset": 1, "values": [1.0]},
                "Phi": f.to_dict(), "phi": {"family": "identity"}}
    s = float(rng.uniform(0.1, 0.9))
    f = ov.get("young") or random_young(rng, s=s)
    x = random_sequence(rng, max_width=4, magnitude=1.0)
    y = random_sequence(rng, max_width=4, magnitude=1.0)
    wt = ov.get("weight") or random_weight(rng)
    return {"x": x.to_dict(), "y": y.to_dict(), "Phi": f.to_dict(), "phi": wt.to_dict()}


def _eval_violation_search(inst):
    f, X, Y, Z = _pair_norms(inst)
    return True, {"violation": Z > (X + Y) * (1.0 + SLACK), "ratio": Z / (X + Y) if X + Y else 0.0, "instance": inst}


def _sum_violation_search(infos):
    hits = [i for i in infos if i["violation"]]
    best = max(infos, key=lambda i: i["ratio"], default=None)
    return {
        "violations_found": len(hits),
        "largest_ratio": best["ratio"] if best else None,
        "example": best["instance"] if best and best["violation"] else None,
    }


@dataclass(frozen=True)
class _Check:
    generate: Callable[..., dict[str, Any]]
    evaluate: Callable[[dict[str, Any]], tuple[bool, dict[str, Any]]]
    summarize: Callable[[list[dict[str, Any]]], dict[str, Any]] | None = None
    fixed_trials: int | None = None


CHECKS: dict[str, _Check] = {
    "positivity_and_zero": _Check(_gen_positivity, _eval_positivity, _sum_positivity),
    "homogeneity": _Check(_gen_homogeneity, _eval_homogeneity),
    "quasi_triangle": _Check(_gen_pair, _eval_quasi_triangle, _sum_quasi_triangle),
    "triangle_s1": _Check(lambda r, i, ov: _gen_pair(r, i, ov, convex=True), _eval_triangle_s1, _sum_triangle_s1),
    "window_lemmas": _Check(_gen_window_instance, _eval_window_lemmas, _sum_window_lemmas),
    "zero_characterization": _Check(_gen_zero_char, _eval_zero_char, _sum_zero_char),
    "inverse_sandwich": _Check(_gen_sandwich, _eval_sandwich, _sum_sandwich),
    "coordinate_bound": _Check(_gen_coordinate, _eval_coordinate),
    "grid_oracle": _Check(_gen_grid_oracle, _eval_grid_oracle, _sum_rel),
    "window_dominance": _Check(_gen_dominance, _eval_dominance),
    "counterexample": _Check(_gen_counterexample, _eval_counterexample, fixed_trials=1),
    "triangle_violation_search": _Check(_gen_violation_search, _eval_violation_search, _sum_violation_search),
}


def _rng(seed: int, name: str) -> np.random.Generator:
    return np.random.default_rng([int(seed) & 0xFFFFFFFF, zlib.crc32(name.encode())])


def run_check(name: str, trials: int, seed: int, **overrides: Any) -> CheckRecord:
    """Run one registered check.  ``young`` / ``weight`` overrides pin the specs."""
    if name not in CHECKS:
        raise ConfigError(f"unknown check {name!r}; known: {sorted(CHECKS)}")
    chk = CHECKS[name]
    n = chk.fixed_trials or int(trials)
    if n < 1:
        raise ConfigError("trials must be at least 1")
    rng = _rng(seed, name)
    infos, first_fail, failures = [], None, 0
    for i in range(n):
        inst = chk.generate(rng, i, overrides)
        ok, info = chk.evaluate(inst)
        infos.append(info)
        if not ok:
            failures += 1
            if first_fail is None:
                first_fail = {"check": name, "instance": inst, "observed": info}
    details = chk.summarize(infos) if chk.summarize else {}
    if name == "counterexample":
        details = infos[0]
    details["failures"] = failures
    return CheckRecord(name, failures == 0, n, first_fail, details)


def replay(counterexample: dict[str, Any]) -> bool:
    """True iff the stored instance still fails when re-evaluated."""
    ok, _ = CHECKS[counterexample["check"]].evaluate(counterexample["instance"])
    return not ok


def _single(name: str, trials: int, seed: int, **ov: Any) -> PropertyReport:
    return PropertyReport(seed, [run_check(name, trials, seed, **ov)])


def check_positivity_and_zero(trials: int, seed: int, **ov: Any) -> PropertyReport:
    return _single("positivity_and_zero", trials, seed, **ov)


def check_homogeneity(trials: int, seed: int, **ov: Any) -> PropertyReport:
    return _single("homogeneity", trials, seed, **ov)


def check_quasi_triangle(trials: int, seed: int, **ov: Any) -> PropertyReport:
    return _single("quasi_triangle", trials, seed, **ov)


def check_lemma_suite(trials: int, seed: int, **ov: Any) -> PropertyReport:
    return PropertyReport(
        seed, [run_check("window_lemmas", trials, seed, **ov), run_check("zero_characterization", trials, seed, **ov)]
    )


@dataclass(frozen=True)
class SuiteConfig:
    seed: int = 42
    trials: int = 100
    checks: tuple[str, ...] = tuple(CHECKS)

    def __post_init__(self) -> None:
        for name in self.checks:
            if name not in CHECKS:
                raise ConfigError(f"unknown check {name!r}; known: {sorted(CHECKS)}")
        if len(set(self.checks)) != len(self.checks):
            raise ConfigError("duplicate check names in configuration")
        if isinstance(self.trials, bool) or not isinstance(self.trials, int) or self.trials < 1:
            raise ConfigError("trials must be a positive integer")
        if isinstance(self.seed, bool) or not isinstance(self.seed, int):
            raise ConfigError("seed must be an integer")

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> SuiteConfig:
        if not isinstance(d, dict):
            raise ConfigError("suite configuration must be an object")
        extra = set(d) - {"seed", "trials", "checks"}
        if extra:
            raise ConfigError(f"unexpected configuration fields: {sorted(extra)}")
        checks = d.get("checks", list(CHECKS))
        if not isinstance(checks, list) or not all(isinstance(c, str) for c in checks):
            raise ConfigError("'checks' must be a list of names")
        return cls(d.get("seed", 42), d.get("trials", 100), tuple(checks))


def run_suite(config: SuiteConfig | dict[str, Any]) -> PropertyReport:
    if isinstance(config, dict):
        config = SuiteConfig.from_dict(config)
    records = [run_check(name, config.trials, config.seed) for name in sorted(config.checks)]
    return PropertyReport(config.seed, records)
