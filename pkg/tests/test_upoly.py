import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from psirr.fields import GF, QQ
from psirr.upoly import UniPoly, ext_gcd, gcd, squarefree_decomposition

T = UniPoly.gen(QQ)


def rand_poly(rng, ctx, deg, monic=False):
    cs = [ctx.random_element(rng, height=4) for _ in range(deg)]
    cs.append(ctx.one if monic else ctx.random_element(rng, nonzero=True, height=4))
    return UniPoly(ctx, cs)


def test_zero_polynomial_degree():
    assert UniPoly(QQ, []).degree == -1
    assert UniPoly(QQ, [0, 0]).degree == -1
    assert not UniPoly(QQ, [0])


def test_ext_gcd_examples():
    g, s, t = ext_gcd(T**2 - 1, T - 1)
    assert (g, s, t) == (T - 1, UniPoly(QQ, []), UniPoly(QQ, [1]))
    g, s, t = ext_gcd(T - 1, T + 1)
    assert g == UniPoly(QQ, [1])
    assert s == UniPoly(QQ, [Fraction(-1, 2)]) and t == UniPoly(QQ, [Fraction(1, 2)])
    a = 3 * T**2 + 1
    g, s, t = ext_gcd(a, UniPoly(QQ, []))
    assert g == a.monic() and s == UniPoly(QQ, [Fraction(1, 3)]) and not t


@pytest.mark.parametrize("ctx", [QQ, GF(2), GF(5), GF(13)], ids=str)
def test_ext_gcd_bezout_random(ctx):
    rng = random.Random(7)
    for _ in range(1000):
        a = rand_poly(rng, ctx, rng.randint(0, 6))
        b = rand_poly(rng, ctx, rng.randint(0, 6))
        if rng.random() < 0.3:
            common = rand_poly(rng, ctx, rng.randint(1, 2), monic=True)
            a, b = a * common, b * common
        g, s, t = ext_gcd(a, b)
        assert s * a + t * b == g
        assert g.is_monic()
        assert not (a % g) and not (b % g)


def test_divmod_identity():
    rng = random.Random(3)
    for _ in range(200):
        a = rand_poly(rng, QQ, rng.randint(0, 7))
        b = rand_poly(rng, QQ, rng.randint(0, 4))
        q, r = divmod(a, b)
        assert q * b + r == a and r.degree < b.degree


def test_squarefree_examples():
    assert squarefree_decomposition((T - 1) ** 2 * (T + 1)) == [(T + 1, 1), (T - 1, 2)]
    assert squarefree_decomposition(T**2 + 1) == [(T**2 + 1, 1)]


@pytest.mark.parametrize("p", [2, 3, 5])
def test_frobenius_power_is_pth_power(p):
    F = GF(p)
    t = UniPoly.gen(F)
    for a in range(p):
        # (T - a)^p expanded by hand: binomials vanish mod p
        hand = UniPoly(F, [(-a) ** (p - k) * comb(p, k) for k in range(p + 1)])
        assert hand == UniPoly.monomial(F, p) - F(a) ** p
        assert squarefree_decomposition(hand) == [(t - a, p)]


@settings(max_examples=150, deadline=None)
@given(st.sampled_from([0, 2, 3, 5]), st.integers(0, 10**6))
def test_squarefree_reassembles(p, seed):
    ctx = QQ if p == 0 else GF(p)
    rng = random.Random(seed)
    f = UniPoly.constant(ctx, 1)
    for _ in range(rng.randint(1, 3)):
        f = f * rand_poly(rng, ctx, rng.randint(1, 2), monic=True) ** rng.randint(1, 3 if p != 2 else 4)
    parts = squarefree_decomposition(f)
    prod = UniPoly.constant(ctx, 1)
    for g, m in parts:
        prod = prod * g**m
        assert g.is_monic() and gcd(g, g.derivative()).is_one()
    assert prod == f
    for i, (g, _) in enumerate(parts):
        for h, _ in parts[i + 1:]:
            assert gcd(g, h).is_one()


def test_inflate_and_eval():
    f = T**2 - 3 * T + 2
    assert f.inflate(3) == T**6 - 3 * T**3 + 2
    assert f(Fraction(1)) == 0 and f(2) == 0


def test_canonical_string():
    assert (T**2 - Fraction(1, 2) * T + 1).to_string("T") == "T^2 - 1/2*T + 1"
    assert UniPoly(QQ, []).to_string("Z") == "0"
