import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from psirr import GF, QQ
from psirr.errors import DegeneratePolynomial, NotApplicable, TruncationTooSmall
from psirr.lp import linprog
from psirr.parser import parse_zpoly
from psirr.polyhedron import (
    WeightVec,
    delta_generators,
    delta_vertices,
    dominates,
    face_witness,
    hull_certificate,
    initial_form,
    omega_extension,
    orthant_check,
    support,
)

from conftest import random_zpoly

TWO_VERTEX = "Z^2 - (x^3 - y^5)^2 + y^11"


def F(*xs):
    return tuple(Fraction(x) for x in xs)


def grid_vertices(G, steps=40):
    """g is a vertex if some positive grid weight makes it the unique minimizer."""
    pts = list(dict.fromkeys(tuple(Fraction(v) for v in g) for g in G))
    n = len(pts[0])
    found = set()
    for w in itertools.product(range(1, steps + 1), repeat=n):
        vals = [sum(a * b for a, b in zip(p, w)) for p in pts]
        m = min(vals)
        if vals.count(m) == 1:
            found.add(pts[vals.index(m)])
    return found


def test_lp_small():
    # max 3a + 2b, a + b <= 4, a + 3b <= 6, a <= 3
    res = linprog([3, 2], [[1, 1], [1, 3], [1, 0]], [4, 6, 3])
    assert res.status == "optimal" and res.value == 11 and res.x == [3, 1]
    assert linprog([1], [[-1]], [-2], [[1]], [1]).status == "infeasible"
    assert linprog([1], [[-1]], [0]).status == "unbounded"


def test_support_and_generators():
    P = parse_zpoly(TWO_VERTEX)
    assert len(support(P)) == 5
    assert delta_generators(P) == [F(6, 0), F(3, 5), F(0, 10), F(0, 11)]
    assert delta_generators(parse_zpoly("Z^2 - x^3")) == [F(3)]
    assert delta_generators(parse_zpoly("Z^2 - x^3*y")) == [F(3, 1)]
    with pytest.raises(DegeneratePolynomial):
        delta_generators(parse_zpoly("Z^3"))


def test_orthant_check_examples():
    assert orthant_check(delta_generators(parse_zpoly(TWO_VERTEX))) is None
    assert orthant_check([F(3)]) == F(3)
    assert orthant_check([F(3, 1)]) == F(3, 1)
    assert orthant_check([F(2, 2), F(3, 2), F(2, 5)]) == F(2, 2)


def test_two_vertex_polyhedron():
    delta = delta_vertices(delta_generators(parse_zpoly(TWO_VERTEX)))
    assert delta.vertices == (F(6, 0), F(0, 10))
    for v in delta.vertices:
        w = delta.witnesses[v]
        assert all(c > 0 for c in w) and sum(w) == 1
        for g in delta.generators:
            if g != v:
                assert sum(a * b for a, b in zip(v, w)) < sum(a * b for a, b in zip(g, w))


def test_midpoint_is_not_a_vertex():
    # (2,2) is the midpoint of (1,3) and (3,1): no positive weight isolates it
    G = [F(2, 2), F(1, 3), F(3, 1)]
    delta = delta_vertices(G)
    assert set(delta.vertices) == {F(1, 3), F(3, 1)}
    assert grid_vertices(G) == set(delta.vertices)
    lam = hull_certificate(F(2, 2), delta.vertices)
    assert lam is not None and sum(lam) == 1


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**6))
def test_vertices_match_grid_oracle(seed):
    rng = random.Random(seed)
    n = rng.choice([1, 2])
    G = [tuple(Fraction(rng.randint(0, 6), rng.randint(1, 3)) for _ in range(n)) for _ in range(rng.randint(1, 6))]
    delta = delta_vertices(G)
    assert set(delta.vertices) == grid_vertices(G, steps=60 if n == 2 else 3)
    for g in G:
        if g not in delta.vertices:
            assert hull_certificate(g, delta.vertices) is not None
    if n == 1:
        assert delta.vertices == (min(delta.generators),)


def test_omega_extension_examples():
    P = parse_zpoly(TWO_VERTEX)
    assert omega_extension(P, (1, 1)).last == 3
    assert omega_extension(P, (5, 3)).last == 15
    assert omega_extension(parse_zpoly("Z^2 - x^3"), (1,)).last == Fraction(3, 2)


def test_initial_form_regimes():
    P = parse_zpoly(TWO_VERTEX)
    xy = ["x", "y"]
    assert initial_form(P, (1, 1)) == parse_zpoly("Z^2 - x^6", names=xy)
    assert initial_form(P, (2, 1)) == parse_zpoly("Z^2 - y^10", names=xy)
    assert initial_form(P, (5, 3)) == parse_zpoly("Z^2 - (x^3 - y^5)^2", names=xy)


def test_initial_form_truncation_guard():
    # weight 2 is reached by x^2, which order 2 does not determine
    P = parse_zpoly("Z^2 - x^2 - y", trunc=2)
    with pytest.raises(TruncationTooSmall):
        initial_form(P, (1, 3))
    P = parse_zpoly("Z^2 - x^2 - y", trunc=3)
    assert initial_form(P, (1, 3)) == parse_zpoly("Z^2 - x^2", names=["x", "y"])


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_initial_form_is_weighted_homogeneous(seed):
    rng = random.Random(seed)
    ctx = rng.choice([QQ, GF(5)])
    n = rng.choice([1, 2, 3])
    P = random_zpoly(rng, ctx, n, rng.randint(1, 4))
    if P.is_pure_power():
        return
    w = omega_extension(P, tuple(Fraction(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(n)))
    form = initial_form(P, w)
    level = P.d * w.last
    terms = list(form.terms())
    assert any(j == P.d for _, j, _ in terms) and any(j < P.d for _, j, _ in terms)
    for alpha, j, _ in terms:
        if j < P.d:
            assert sum(a * b for a, b in zip(alpha + (j,), w.extended())) == level


def test_weights_must_be_positive():
    with pytest.raises(ValueError):
        WeightVec((1, 0))


def test_face_witness():
    assert face_witness(parse_zpoly(TWO_VERTEX)) == ((0, 0, 2), (6, 0, 0), (0, 10, 0))
    assert face_witness(parse_zpoly("Z^3 - x^2*Z - y^2")) == ((0, 0, 3), (2, 0, 1), (0, 2, 0))
    with pytest.raises(NotApplicable):
        face_witness(parse_zpoly("Z^2 - x^3"))


def test_dominates():
    assert dominates(F(1, 2), F(1, 3)) and not dominates(F(2, 1), F(1, 3))
