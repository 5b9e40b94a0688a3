import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from timedalign import BACKENDS, SequentialProcessModel, TimedTrace

DENOMINATORS = [1, 2, 3, 4, 5, 10]

rationals = st.builds(Fraction, st.integers(-60, 60), st.sampled_from(DENOMINATORS))


def traces(min_size=0, max_size=8):
    return st.lists(rationals, min_size=min_size, max_size=max_size).map(TimedTrace)


@st.composite
def trace_pairs(draw, min_size=0, max_size=8):
    n = draw(st.integers(min_size, max_size))
    a = draw(st.lists(rationals, min_size=n, max_size=n))
    b = draw(st.lists(rationals, min_size=n, max_size=n))
    return TimedTrace(a), TimedTrace(b)


def random_rational(rng: random.Random, lo=-40, hi=40) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.choice(DENOMINATORS))


def random_trace(rng: random.Random, n: int) -> TimedTrace:
    return TimedTrace(random_rational(rng) for _ in range(n))


def random_model(rng: random.Random, n: int) -> SequentialProcessModel:
    spec = []
    for _ in range(n):
        eft = Fraction(rng.randint(0, 20), rng.choice([1, 2, 4]))
        if rng.random() < 0.15:
            spec.append((eft, "inf"))
        else:
            spec.append((eft, eft + Fraction(rng.randint(0, 20), rng.choice([1, 2, 5]))))
    return SequentialProcessModel.from_intervals(spec)


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param


@pytest.fixture
def example6_model():
    return SequentialProcessModel.from_intervals([(0, 1), (2, 2), (1, 1)], labels="def", name="example6")


ACCEPTANCE_LINES: list[str] = []


def record_criterion(name: str, ok: bool, detail: str = "") -> None:
    line = f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  ({detail})" if detail else "")
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
