import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20241019)


def cvec(rng, d):
    return rng.standard_normal(d) + 1j * rng.standard_normal(d)


def brute_inner(x, y):
    """Inner product by an explicit loop, conjugating the first slot."""
    return sum(complex(xi).conjugate() * complex(yi) for xi, yi in zip(x, y))


def brute_generator_apply(a, b, c):
    ac = brute_inner(a, c)
    bc = brute_inner(b, c)
    return np.array([ac * bi - bc * ai for ai, bi in zip(a, b)])


def rel(x, y, scale=None):
    scale = np.linalg.norm(y) if scale is None else scale
    return float(np.linalg.norm(np.asarray(x) - np.asarray(y)) / scale)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
