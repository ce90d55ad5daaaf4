import itertools
import random

import pytest
import sympy

from psirr.errors import DegreeBoundExceeded
from psirr.factor import (
    coprime_split,
    distinct_degree_factorization,
    factor_fp,
    factor_q,
    is_irreducible_fp,
    power_base,
)
from psirr.fields import GF, QQ
from psirr.upoly import UniPoly, gcd


def poly(ctx, coeffs_high_first):
    return UniPoly(ctx, list(reversed(coeffs_high_first)))


def brute_irreducible(f):
    """No monic divisor of degree 1..deg/2, by exhaustive enumeration (tiny p, deg)."""
    ctx = f.ctx
    els = list(ctx.elements())
    for k in range(1, f.degree // 2 + 1):
        for tail in itertools.product(els, repeat=k):
            g = UniPoly(ctx, list(tail) + [ctx.one])
            if not (f % g):
                return False
    return True


def test_fp_examples():
    F5, F3, F2 = GF(5), GF(3), GF(2)
    assert factor_fp(poly(F5, [1, 0, 1])) == [(poly(F5, [1, 2]), 1), (poly(F5, [1, 3]), 1)]
    assert factor_fp(poly(F3, [1, 0, 1])) == [(poly(F3, [1, 0, 1]), 1)]
    assert factor_fp(poly(F2, [1, 0, -1])) == [(poly(F2, [1, 1]), 2)]


def test_rabin_matches_brute_force():
    rng = random.Random(1)
    for p in (2, 3):
        F = GF(p)
        for _ in range(150):
            deg = rng.randint(1, 5)
            f = UniPoly(F, [F.random_element(rng) for _ in range(deg)] + [F.one])
            assert is_irreducible_fp(f) == brute_irreducible(f)


def test_ddf_degrees():
    F = GF(3)
    f = poly(F, [1, 0, 1]) * poly(F, [1, 1]) * poly(F, [1, 0, 2, 1])
    parts = dict((k, g) for g, k in distinct_degree_factorization(f))
    assert parts[1] == poly(F, [1, 1])
    assert parts[2] == poly(F, [1, 0, 1])
    assert parts[3] == poly(F, [1, 0, 2, 1])


def test_seed_determinism():
    F = GF(13)
    rng = random.Random(9)
    f = UniPoly(F, [F.random_element(rng) for _ in range(8)] + [F.one])
    assert factor_fp(f, seed=4) == factor_fp(f, seed=4)


def test_coprime_split_q_examples():
    T = UniPoly.gen(QQ)
    assert coprime_split(T**2 - 1) == (T - 1, T + 1) or coprime_split(T**2 - 1) == (T + 1, T - 1)
    assert coprime_split((T - 1) ** 3) is None
    assert coprime_split(T**2 + 1) is None
    assert power_base((T - 1) ** 3) == (T - 1, 3)


def test_coprime_split_degree_bound():
    T = UniPoly.gen(QQ)
    f = T**9 - 2
    with pytest.raises(DegreeBoundExceeded):
        coprime_split(f)
    assert coprime_split(f, degree_bound=9) is None


def _sympy_factor(f):
    t = sympy.Symbol("t")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * t**i for i, c in enumerate(f.coeffs))
    _, facs = sympy.factor_list(expr, t)
    return sorted((sympy.Poly(g, t).degree(), m) for g, m in facs)


def test_factor_q_against_sympy():
    rng = random.Random(5)
    T = UniPoly.gen(QQ)
    for _ in range(60):
        f = UniPoly.constant(QQ, 1)
        for _ in range(rng.randint(1, 3)):
            deg = rng.randint(1, 3)
            g = UniPoly(QQ, [rng.randint(-5, 5) for _ in range(deg)] + [1])
            f = f * g ** rng.randint(1, 2)
        if f.degree > 8:
            continue
        ours = sorted((g.degree, m) for g, m in factor_q(f))
        assert ours == _sympy_factor(f), f
        split = coprime_split(f)
        assert (split is None) == (len(ours) == 1)
        if split:
            f1, f2 = split
            assert f1 * f2 == f and gcd(f1, f2).is_one()
    # classic: x^4 + 4 = (x^2 - 2x + 2)(x^2 + 2x + 2) has no rational roots
    assert sorted(g.degree for g, _ in factor_q(T**4 + 4)) == [2, 2]


@pytest.mark.parametrize("p", [2, 3, 5, 13])
def test_coprime_split_fp_consistent(p):
    F = GF(p)
    rng = random.Random(p)
    for _ in range(100):
        f = UniPoly(F, [F.random_element(rng) for _ in range(rng.randint(1, 6))] + [F.one])
        facs = factor_fp(f)
        split = coprime_split(f)
        if split is None:
            assert len(facs) == 1
        else:
            f1, f2 = split
            assert f1 * f2 == f and gcd(f1, f2).is_one() and f1.degree > 0 and f2.degree > 0
