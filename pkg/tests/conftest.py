import random

import pytest

from thompoly.chern import BundleRing
from thompoly.polynomial import Poly

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def weighted_monomials(ring, degree):
    """Exponent vectors of weighted degree ``degree`` over the ring's Chern variables."""

    def rec(k, left):
        if k == ring.nvars:
            if left == 0:
                yield ()
            return
        w = ring.weights[k]
        for e in range(left // w, -1, -1):
            for rest in rec(k + 1, left - e * w):
                yield (e,) + rest

    return list(rec(0, degree))


def random_homogeneous(rng: random.Random, max_rank=3, max_degree=6, names=("A", "B")):
    ring = BundleRing([(n, rng.randint(1, max_rank)) for n in names])
    degree = rng.randint(1, max_degree)
    monos = weighted_monomials(ring, degree)
    terms = {}
    for m in rng.sample(monos, min(len(monos), rng.randint(1, 6))):
        terms[m] = rng.choice([c for c in range(-5, 6) if c])
    return Poly(ring, terms)


@pytest.fixture
def rng():
    return random.Random(20261016)
