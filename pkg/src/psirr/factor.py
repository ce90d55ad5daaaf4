"""Univariate factorization and the coprime-split decision.

Over F_p this is square-free decomposition followed by distinct-degree and
Cantor-Zassenhaus equal-degree splitting, seeded for reproducibility. Over Q
only what the criterion needs is decided: whether a monic polynomial is a
power of a single irreducible, with full factorization of the square-free
part (Zassenhaus: factor mod p, Hensel lift, recombine) up to a degree bound.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from itertools import combinations

from .errors import DegreeBoundExceeded
from .fields import GF, QQ, is_prime
from .upoly import UniPoly, ext_gcd, gcd, squarefree_decomposition

DEFAULT_DEGREE_BOUND = 8
DEFAULT_SEED = 0


def _prime_factors(n: int) -> list[int]:
    out, k = [], 2
    while k * k <= n:
        if n % k == 0:
            out.append(k)
            while n % k == 0:
                n //= k
        k += 1
    if n > 1:
        out.append(n)
    return out


def _frobenius_power(f: UniPoly, k: int) -> UniPoly:
    """T^(p^k) mod f."""
    p = f.ctx.characteristic
    h = UniPoly.gen(f.ctx) % f
    for _ in range(k):
        h = h.powmod(p, f)
    return h


def is_irreducible_fp(f: UniPoly) -> bool:
    """Rabin's test: f | T^(p^n) - T and gcd(f, T^(p^(n/r)) - T) = 1 for primes r | n."""
    n = f.degree
    if n < 1:
        return False
    if n == 1:
        return True
    f = f.monic()
    T = UniPoly.gen(f.ctx)
    for r in _prime_factors(n):
        if gcd(f, _frobenius_power(f, n // r) - T).degree > 0:
            return False
    return ((_frobenius_power(f, n) - T) % f).is_zero()


def distinct_degree_factorization(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Split a monic square-free f into products of irreducibles of equal degree."""
    T = UniPoly.gen(f.ctx)
    p = f.ctx.characteristic
    out = []
    rest = f
    h = T
    i = 1
    while rest.degree >= 2 * i:
        h = h.powmod(p, rest)
        g = gcd(rest, h - T)
        if g.degree > 0:
            out.append((g, i))
            rest = rest.exact_div(g)
            h = h % rest
        i += 1
    if rest.degree > 0:
        out.append((rest, rest.degree))
    return out


def equal_degree_factorization(f: UniPoly, k: int, rng: random.Random) -> list[UniPoly]:
    """Cantor-Zassenhaus: split f, a product of distinct irreducibles of degree k."""
    if f.degree == k:
        return [f]
    ctx = f.ctx
    p = ctx.characteristic
    while True:
        a = UniPoly(ctx, [rng.randrange(p) for _ in range(f.degree)])
        if a.degree < 1:
            continue
        if p == 2:
            # absolute trace to F_2 of a in F_{2^k}
            b = a % f
            t = b
            for _ in range(k - 1):
                b = (b * b) % f
                t = t + b
        else:
            t = a.powmod((p**k - 1) // 2, f) - 1
        g = gcd(f, t)
        if 0 < g.degree < f.degree:
            return equal_degree_factorization(g, k, rng) + equal_degree_factorization(
                f.exact_div(g), k, rng
            )


def factor_fp(f: UniPoly, seed: int = DEFAULT_SEED) -> list[tuple[UniPoly, int]]:
    """Complete factorization of a monic polynomial over F_p.

    Returns ``[(phi, e), ...]`` with distinct monic irreducible ``phi``, sorted
    by degree then coefficients.

    >>> T = UniPoly.gen(GF(5))
    >>> [(str(g), e) for g, e in factor_fp(T**2 + 1)]
    [('T + 2', 1), ('T + 3', 1)]
    """
    if not f.ctx.is_prime_field:
        raise ValueError("factor_fp needs a prime field")
    if not f.is_monic() or f.degree < 1:
        raise ValueError("factor_fp expects a monic nonconstant polynomial")
    rng = random.Random(seed)
    out = []
    for g, mult in squarefree_decomposition(f):
        for h, k in distinct_degree_factorization(g):
            out.extend((phi, mult) for phi in equal_degree_factorization(h, k, rng))
    out.sort(key=lambda pe: (pe[0].sort_key(), pe[1]))
    return out


# -- integer polynomial helpers (lists of ints, low degree first) -------------


def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _imul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _isub(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def _symmetric(a, m):
    half = m // 2
    return _trim([(c % m) - m if (c % m) > half else c % m for c in a])


def _content(a):
    g = 0
    for c in a:
        g = math.gcd(g, c)
    return g


def _primitive(a):
    a = _trim(a)
    g = _content(a)
    if g == 0:
        return a
    if a[-1] < 0:
        g = -g
    return [c // g for c in a]


def _integer_primitive(f: UniPoly) -> list[int]:
    den = 1
    for c in f.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    return _primitive([int(c * den) for c in f.coeffs])


def _divides_over_z(g, f) -> bool:
    G = UniPoly(QQ, g)
    F = UniPoly(QQ, f)
    q, r = divmod(F, G)
    return r.is_zero() and all(c.denominator == 1 for c in q.coeffs)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    k = 1
    while k * k <= n:
        if n % k == 0:
            small.append(k)
            if k * k != n:
                large.append(n // k)
        k += 1
    return small + large[::-1]


def _rational_root(f: UniPoly) -> Fraction | None:
    F = _integer_primitive(f)
    if F[0] == 0:
        return Fraction(0)
    for b in _divisors(F[-1]):
        for a in _divisors(F[0]):
            for r in (Fraction(a, b), Fraction(-a, b)):
                if not f(r):
                    return r
    return None


def _hensel_step_pair(F, g, h, p, k_target):
    """Lift F = g*h mod p (g monic mod p, lc(h) = lc(F)) to mod p^k_target."""
    ctx = GF(p)
    gp = UniPoly(ctx, g)
    hp = UniPoly(ctx, h)
    one, s, t = ext_gcd(gp, hp)
    assert one.is_one()
    modulus = p
    for _ in range(k_target - 1):
        e = _isub(F, _imul(g, h))
        assert all(c % modulus == 0 for c in e)
        ep = UniPoly(ctx, [c // modulus for c in e])
        quo, rem = divmod(t * ep, gp)
        dh = s * ep + quo * hp
        g = _trim([a + modulus * int(b) for a, b in _zip_long(g, rem.coeffs)])
        h = _trim([a + modulus * int(b) for a, b in _zip_long(h, dh.coeffs)])
        modulus *= p
    return g, h


def _zip_long(a, b):
    n = max(len(a), len(b))
    return [
        (a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n)
    ]


def _find_factor_zassenhaus(F: list[int]) -> list[int] | None:
    """A proper factor of the square-free primitive integer polynomial F, or None."""
    n = len(F) - 1
    lc = F[-1]
    p = 3
    while True:
        if lc % p:
            Fp = UniPoly(GF(p), F)
            if gcd(Fp, Fp.derivative()).degree == 0:
                break
        p += 2
        while not is_prime(p):
            p += 2
    ctx = GF(p)
    Fp = UniPoly(ctx, F).monic()
    factors = [phi for phi, _ in factor_fp(Fp)]
    if len(factors) == 1:
        return None
    # Mignotte-style bound on coefficients of any factor, times lc
    norm = math.isqrt(sum(c * c for c in F)) + 1
    bound = 2 * abs(lc) * (2**n) * norm
    k = 1
    while p**k <= bound:
        k += 1
    modulus = p**k
    lifted = []
    rest_int = list(F)
    remaining = [[int(c) for c in phi.coeffs] for phi in factors]
    while len(remaining) > 1:
        g = remaining[0]
        hp = UniPoly(ctx, [1])
        for other in remaining[1:]:
            hp = hp * UniPoly(ctx, other)
        h = [int(c) for c in hp.scale(rest_int[-1]).coeffs]
        h[-1] = rest_int[-1]
        g_l, h_l = _hensel_step_pair(rest_int, g, h, p, k)
        lifted.append(_symmetric(g_l, modulus))
        rest_int = _symmetric(h_l, modulus)
        remaining = remaining[1:]
    lifted.append(_symmetric(_monic_mod(rest_int, modulus), modulus))
    r = len(lifted)
    for size in range(1, r // 2 + 1):
        for subset in combinations(range(r), size):
            G = [lc]
            for i in subset:
                G = _symmetric(_imul(G, lifted[i]), modulus)
            G = _primitive(G)
            if 0 < len(G) - 1 < n and _divides_over_z(G, F):
                return G
    return None


def _monic_mod(a, m):
    inv = pow(a[-1], -1, m)
    return [c * inv % m for c in a]




def _split_squarefree_q(g: UniPoly, bound: int) -> tuple[UniPoly, UniPoly] | None:
    """Proper monic split of a square-free polynomial over Q, or None if irreducible."""
    if g.degree <= 1:
        return None
    root = _rational_root(g)
    if root is not None:
        lin = UniPoly(QQ, [-root, 1])
        return lin, g.exact_div(lin)
    if g.degree <= 3:
        return None
    if g.degree > bound:
        raise DegreeBoundExceeded(g.degree, bound)
    G = _find_factor_zassenhaus(_integer_primitive(g))
    if G is None:
        return None
    g1 = UniPoly(QQ, G).monic()
    return g1, g.exact_div(g1)


def coprime_split(
    f: UniPoly, degree_bound: int = DEFAULT_DEGREE_BOUND, seed: int = DEFAULT_SEED
) -> tuple[UniPoly, UniPoly] | None:
    """Split a monic f into two coprime monic nonconstant factors, if possible.

    Returns None exactly when f is a power of one irreducible polynomial.
    Over Q, raises ``DegreeBoundExceeded`` when the decision would need a
    full factorization of a square-free part of degree above ``degree_bound``.
    """
    if not f.is_monic() or f.degree < 1:
        raise ValueError("coprime_split expects a monic polynomial of degree >= 1")
    if f.ctx.is_prime_field:
        factors = factor_fp(f, seed)
        if len(factors) < 2:
            return None
        phi, e = factors[0]
        f1 = phi**e
        return f1, f.exact_div(f1)
    parts = squarefree_decomposition(f)
    if len(parts) >= 2:
        g, m = parts[0]
        f1 = g**m
        return f1, f.exact_div(f1)
    g, m = parts[0]
    split = _split_squarefree_q(g, degree_bound)
    if split is None:
        return None
    g1, g2 = split
    return g1**m, g2**m


def power_base(
    f: UniPoly, degree_bound: int = DEFAULT_DEGREE_BOUND, seed: int = DEFAULT_SEED
) -> tuple[UniPoly, int]:
    """For f = phi^r with phi irreducible, return ``(phi, r)``."""
    if coprime_split(f, degree_bound, seed) is not None:
        raise ValueError(f"{f} is not a power of a single irreducible")
    (g, m), = squarefree_decomposition(f)
    return g, m


def factor_q(f: UniPoly, degree_bound: int = DEFAULT_DEGREE_BOUND) -> list[tuple[UniPoly, int]]:
    """Complete factorization over Q of a monic polynomial, square-free parts up to the bound."""
    out = []
    for g, m in squarefree_decomposition(f):
        stack = [g]
        while stack:
            h = stack.pop()
            split = _split_squarefree_q(h, degree_bound)
            if split is None:
                out.append((h, m))
            else:
                stack.extend(split)
    out.sort(key=lambda pe: (pe[0].sort_key(), pe[1]))
    return out


def factor(f: UniPoly, degree_bound: int = DEFAULT_DEGREE_BOUND, seed: int = DEFAULT_SEED):
    if f.ctx.is_prime_field:
        return factor_fp(f, seed)
    return factor_q(f, degree_bound)


__all__ = [
    "coprime_split",
    "distinct_degree_factorization",
    "equal_degree_factorization",
    "factor",
    "factor_fp",
    "factor_q",
    "is_irreducible_fp",
    "power_base",
]
