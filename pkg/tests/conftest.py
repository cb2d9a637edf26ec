import numpy as np
import pytest

from orlicz_morrey import SYoungSpec, WeightSpec


@pytest.fixture
def identity():
    return WeightSpec("identity")


@pytest.fixture
def square():
    return SYoungSpec("power", 1.0, 2.0)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


BUILTIN_YOUNG = [
    SYoungSpec("power", 1.0, 2.0),
    SYoungSpec("power", 0.5, 0.5),
    SYoungSpec("power", 1.0, 1.0),
    SYoungSpec("exp_minus_one", 1.0),
    SYoungSpec("exp_minus_one", 0.3),
    SYoungSpec("power_log", 1.0, 1.5),
    SYoungSpec("power_log", 0.4, 0.4),
]

BUILTIN_WEIGHTS = [
    WeightSpec("identity"),
    WeightSpec("power", theta=0.5),
    WeightSpec("power", theta=0.0),
    WeightSpec("constant", c=1.0),
    WeightSpec("constant", c=2.5),
]


ACCEPTANCE: dict[int, str] = {}


def record(number: int, passed: bool, text: str) -> None:
    line = f"[{'PASS' if passed else 'FAIL'}] criterion {number:2d}: {text}"
    ACCEPTANCE[number] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[n])
