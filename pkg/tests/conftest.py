import math

import pytest
from hypothesis import strategies as st

from eulermat import Mat2c

finite = st.floats(min_value=-10, max_value=10, allow_nan=False, allow_infinity=False)


@st.composite
def complexes(draw, radius=10.0):
    r = draw(st.floats(min_value=0, max_value=radius))
    t = draw(st.floats(min_value=-math.pi, max_value=math.pi))
    return complex(r * math.cos(t), r * math.sin(t))


@st.composite
def matrices(draw, radius=10.0):
    return Mat2c(*(draw(complexes(radius)) for _ in range(4)))


nonzero_alpha = st.floats(min_value=0.1, max_value=10).flatmap(
    lambda a: st.sampled_from([a, -a]))


@pytest.fixture
def rng():
    import random
    return random.Random(20070301)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
