import os
import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from hambypass.core import build

settings.register_profile("default", max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

# lines recorded by the acceptance suite, echoed at the end of the run
ACCEPTANCE_LINES: list[str] = []


@st.composite
def digraphs(draw, min_order=1, max_order=7):
    p = draw(st.integers(min_order, max_order))
    flags = draw(st.lists(st.booleans(), min_size=p * (p - 1), max_size=p * (p - 1)))
    pairs = [(u, v) for u in range(p) for v in range(p) if u != v]
    return build(p, [uv for uv, f in zip(pairs, flags) if f])


def random_digraph(rng: random.Random, p: int, density: float = 0.5):
    return build(p, [(u, v) for u in range(p) for v in range(p) if u != v and rng.random() < density])


def random_relabel(rng: random.Random, p: int) -> list[int]:
    perm = list(range(p))
    rng.shuffle(perm)
    return perm


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
