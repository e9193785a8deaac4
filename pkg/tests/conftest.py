from __future__ import annotations

from fractions import Fraction

from hypothesis import settings, strategies as st

from gammasym.linalg import Matrix

settings.register_profile("default", max_examples=60, deadline=None, derandomize=True)
settings.load_profile("default")


def rationals(height: int = 6, max_den: int = 4):
    return st.builds(Fraction, st.integers(-height, height), st.integers(1, max_den))


def nonzero_rationals(height: int = 6, max_den: int = 4):
    return rationals(height, max_den).filter(bool)


@st.composite
def matrices(draw, rows=None, cols=None, max_dim: int = 4, height: int = 5):
    r = draw(st.integers(1, max_dim)) if rows is None else rows
    c = draw(st.integers(1, max_dim)) if cols is None else cols
    entries = draw(st.lists(st.lists(rationals(height, 3), min_size=c, max_size=c), min_size=r, max_size=r))
    return Matrix(entries)


@st.composite
def symmetric_matrices(draw, n=None, max_dim: int = 4):
    n = draw(st.integers(1, max_dim)) if n is None else n
    m = draw(matrices(n, n))
    return m + m.T


@st.composite
def invertible_matrices(draw, n: int):
    m = draw(matrices(n, n, height=3))
    if not m.is_invertible():
        # unit lower-triangular fallback keeps the draw cheap
        m = Matrix([[m[i, j] if j < i else (1 if i == j else 0) for j in range(n)] for i in range(n)])
    return m


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.line(n))
