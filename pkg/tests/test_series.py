"""Sparse multivariate and truncated arithmetic (XPoly, ZPoly)."""

import random
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from psirr import GF, QQ, XPoly, ZPoly
from psirr.parser import parse_zpoly
from psirr.zpoly import zpoly_mul_trunc

from conftest import random_zpoly


def test_mul_trunc_examples():
    P = parse_zpoly("Z - x")
    Q = parse_zpoly("Z + x")
    assert zpoly_mul_trunc(P, Q, 5) == parse_zpoly("Z^2 - x^2")
    assert zpoly_mul_trunc(parse_zpoly("Z - 1"), parse_zpoly("Z + 1"), 1) == parse_zpoly("Z^2 - 1")
    A = parse_zpoly("Z - x - 1/2*x^2")
    B = parse_zpoly("Z + x + 1/2*x^2")
    assert zpoly_mul_trunc(A, B, 3) == parse_zpoly("Z^2 - x^2")


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 9))
def test_mul_trunc_is_truncated_product(seed, order):
    rng = random.Random(seed)
    ctx = rng.choice([QQ, GF(5)])
    n = rng.choice([1, 2])
    A = random_zpoly(rng, ctx, n, rng.randint(1, 3))
    B = random_zpoly(rng, ctx, n, rng.randint(1, 3))
    full = zpoly_mul_trunc(A, B, None)
    assert zpoly_mul_trunc(A, B, order) == full.truncate(order)
    assert full.d == A.d + B.d


def test_xpoly_basics():
    x = XPoly.var(QQ, 2, 0)
    y = XPoly.var(QQ, 2, 1)
    p = (x + y) ** 3
    assert p.order() == 3 and p.total_degree() == 3
    assert p.homogeneous_part(3) == p
    assert p.truncate(3) == XPoly.zero(QQ, 2)
    assert p.to_string(["x", "y"]) == "x^3 + 3*x^2*y + 3*x*y^2 + y^3"
    assert (x * y).coeff((1, 1)) == 1
    assert x.mul_trunc(y, 2) == XPoly.zero(QQ, 2)


def test_zpoly_terms_and_views():
    P = parse_zpoly("Z^2 - (x^3 - y^5)^2 + y^11")
    terms = {(a, j): c for a, j, c in P.terms()}
    assert terms == {
        ((0, 0), 2): 1,
        ((6, 0), 0): -1,
        ((3, 5), 0): 2,
        ((0, 10), 0): -1,
        ((0, 11), 0): 1,
    }
    assert P.at_ones().to_string("Z") == "Z^2 + 1"
    assert P.at_zero().to_string("Z") == "Z^2"


def test_truncation_drops_high_terms():
    P = parse_zpoly("Z^2 - x^2 - x^3", trunc=None)
    assert P.truncate(3) == parse_zpoly("Z^2 - x^2")
    assert P.truncate(3).trunc == 3


def test_scale_variables():
    P = parse_zpoly("Z^2 - x^2*y - x*y*Z")
    S = P.scale_variables([Fraction(2), Fraction(3)])
    assert S == parse_zpoly("Z^2 - 12*x^2*y - 6*x*y*Z")
