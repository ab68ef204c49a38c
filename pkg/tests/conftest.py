from __future__ import annotations

from fractions import Fraction

from hypothesis import settings
from hypothesis import strategies as st

from enhadhm.exactmat import RatMatrix

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_fractions = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


@st.composite
def matrices(draw, rows=None, cols=None, max_dim=5, elements=small_fractions):
    m = draw(st.integers(0, max_dim)) if rows is None else rows
    n = draw(st.integers(0, max_dim)) if cols is None else cols
    data = [[draw(elements) for _ in range(n)] for _ in range(m)]
    return RatMatrix(m, n, data)


@st.composite
def low_rank_matrices(draw, max_dim=5):
    """Products of thin factors, so rank deficiency actually shows up."""
    m = draw(st.integers(1, max_dim))
    n = draw(st.integers(1, max_dim))
    k = draw(st.integers(0, min(m, n)))
    ints = st.integers(-3, 3).map(Fraction)
    return draw(matrices(m, k, elements=ints)) @ draw(matrices(k, n, elements=ints))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import SUMMARY
    except ImportError:
        return
    if SUMMARY:
        terminalreporter.section("acceptance criteria")
        for line in SUMMARY:
            terminalreporter.write_line(line)
