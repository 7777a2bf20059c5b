import random
from fractions import Fraction

import pytest

from curvex.binform import BinaryForm, LinearMap2, discriminant


def random_form(rng, n, lo=-5, hi=5, square_free=True, rational=False):
    while True:
        if rational:
            c = [Fraction(rng.randint(lo, hi), rng.randint(1, 4)) for _ in range(n + 1)]
        else:
            c = [Fraction(rng.randint(lo, hi)) for _ in range(n + 1)]
        if c[n] == 0 or c[0] == 0:
            continue
        q = BinaryForm(c)
        if not square_free or discriminant(q) != 0:
            return q


def random_map(rng, lo=-4, hi=4):
    while True:
        a, b, c, d = (rng.randint(lo, hi) for _ in range(4))
        if a * d - b * c:
            return LinearMap2(a, b, c, d)


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(RESULTS, key=lambda k: int(k)):
        terminalreporter.write_line(RESULTS[key])
