import random
from fractions import Fraction

import pytest

from borelcover.borel import MonomialIdeal
from borelcover.ring import Monomial, parse_xpoly


@pytest.fixture
def j1sat():
    """Saturation of the first Borel chart of 4 points in the plane."""
    return MonomialIdeal.parse("x2^2, x2*x1, x1^3", 2)


@pytest.fixture
def j2sat():
    return MonomialIdeal.parse("x2, x1^4", 2)


@pytest.fixture
def lex_cubic():
    """The only Borel chart of the cubic curves in P^3."""
    return MonomialIdeal.parse("x3, x2^3", 3)


@pytest.fixture
def two_quadrics():
    return [parse_xpoly("x2^2", 2), parse_xpoly("x1^2", 2)]


@pytest.fixture
def g_shear():
    """x2 -> x2, x1 -> x2 + x1, x0 -> x0."""
    return ((1, 0, 0), (0, 1, 1), (0, 0, 1))


def mono(text, n):
    poly = parse_xpoly(text, n)
    assert len(poly.terms) == 1
    return poly.terms[0][0]


def rational_sampler(seed, num_bound=4, den_bound=3):
    rng = random.Random(seed)

    def draw():
        return Fraction(rng.randint(-num_bound, num_bound), rng.randint(1, den_bound))

    return draw


def borel_leq_partial_sums(a: Monomial, b: Monomial) -> bool:
    """Independent oracle for the Borel order: top partial sums dominate."""
    if a.degree() != b.degree():
        raise ValueError("equal degrees required")
    ta = tb = 0
    for i in range(len(a.exps) - 1, -1, -1):
        ta += a.exps[i]
        tb += b.exps[i]
        if tb < ta:
            return False
    return True
