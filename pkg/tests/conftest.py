import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import settings, strategies as st

from finequant import SuperPoly

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

N = 3
LAM = Fraction(1, 3)
DELTA = Fraction(13, 7)
MU = LAM + DELTA


def naive_product(n, f, g):
    """Reference Grassmann product: concatenate index words, bubble-sort, count swaps."""
    out = {}
    for ((a,), ma), ca in f.terms.items():
        for ((b,), mb), cb in g.terms.items():
            word = [i for i in range(n) if ma >> i & 1] + [i for i in range(n) if mb >> i & 1]
            if len(set(word)) < len(word):
                continue
            sign = 1
            for i in range(len(word)):
                for j in range(len(word) - 1 - i):
                    if word[j] > word[j + 1]:
                        word[j], word[j + 1] = word[j + 1], word[j]
                        sign = -sign
            key = ((a + b,), sum(1 << i for i in word))
            out[key] = out.get(key, 0) + sign * ca * cb
    return SuperPoly(n, out)


def _subsets(n, parity):
    subsets = [c for r in range(n + 1) for c in combinations(range(1, n + 1), r)]
    if parity is not None:
        subsets = [c for c in subsets if len(c) % 2 == parity]
    return subsets


def random_superpoly(rng, n, max_terms=4, max_x=3, parity=None):
    subsets = _subsets(n, parity)
    out = SuperPoly(n)
    for _ in range(rng.randint(1, max_terms)):
        coef = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        out = out + SuperPoly.monomial(n, rng.randint(0, max_x), rng.choice(subsets), coef)
    return out


rationals = st.builds(Fraction, st.integers(-5, 5), st.integers(1, 4))


@st.composite
def superpolys(draw, n, parity=None, max_terms=4, max_x=3):
    items = draw(st.lists(st.tuples(st.integers(0, max_x), st.sampled_from(_subsets(n, parity)),
                                    rationals), min_size=1, max_size=max_terms))
    out = SuperPoly(n)
    for a, odd, coef in items:
        out = out + SuperPoly.monomial(n, a, odd, coef)
    return out


@pytest.fixture
def rng():
    return random.Random(20241018)


# Lines recorded by the acceptance criteria, echoed in the terminal summary so
# they survive output capture.
ACCEPTANCE_LOG = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LOG:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LOG, key=lambda s: int(s.split()[2])):
            terminalreporter.write_line(line)
