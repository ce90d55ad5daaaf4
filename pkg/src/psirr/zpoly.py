"""Monic polynomials in Z with (truncated) power-series coefficients."""

from __future__ import annotations

from .fields import FieldCtx
from .printing import format_terms
from .upoly import UniPoly
from .xpoly import XPoly, default_names, grlex_key


class ZPoly:
    """``Z^d + a_{d-1}(x) Z^{d-1} + ... + a_0(x)``.

    ``coeffs`` holds ``a_0, ..., a_{d-1}``; the leading 1 is implicit.
    ``trunc`` is None for exact polynomial coefficients, or N when every
    coefficient is only known modulo (x)^N (all stored terms then have total
    x-degree < N). Equality compares the stored terms and ignores ``trunc``.
    """

    __slots__ = ("ctx", "n", "d", "coeffs", "trunc", "names")

    def __init__(self, ctx: FieldCtx, n: int, d: int, coeffs, trunc: int | None = None, names=None):
        coeffs = list(coeffs)
        if len(coeffs) != d:
            raise ValueError(f"expected {d} coefficients, got {len(coeffs)}")
        if d < 1:
            raise ValueError("degree in Z must be at least 1")
        fixed = []
        for a in coeffs:
            if not isinstance(a, XPoly):
                a = XPoly.constant(ctx, n, a)
            if a.n != n:
                raise ValueError("coefficient has the wrong number of variables")
            fixed.append(a.truncate(trunc))
        self.ctx = ctx
        self.n = n
        self.d = d
        self.coeffs = tuple(fixed)
        self.trunc = trunc
        self.names = tuple(names) if names else tuple(default_names(n))

    @classmethod
    def from_terms(cls, ctx, n, d, terms, trunc=None, names=None) -> ZPoly:
        """Build from ``{(alpha, j): c}`` with j < d (the Z^d term is implicit).

        An entry ``((0,...,0), d): 1`` is accepted and ignored.
        """
        per_j: list[dict] = [dict() for _ in range(d)]
        items = terms.items() if isinstance(terms, dict) else terms
        for (alpha, j), c in items:
            if j == d:
                if tuple(alpha) != (0,) * n or ctx(c) != 1:
                    raise ValueError("leading coefficient must be exactly 1")
                continue
            if not 0 <= j < d:
                raise ValueError(f"Z-degree {j} out of range")
            per_j[j][tuple(alpha)] = per_j[j].get(tuple(alpha), ctx.zero) + ctx(c)
        return cls(ctx, n, d, [XPoly(ctx, n, t) for t in per_j], trunc, names)

    @classmethod
    def from_unipoly(cls, f: UniPoly, n: int, trunc=None, names=None) -> ZPoly:
        if not f.is_monic():
            raise ValueError("expected a monic polynomial")
        return cls(f.ctx, n, f.degree, list(f.coeffs[:-1]), trunc, names)

    def with_names(self, names) -> ZPoly:
        return ZPoly(self.ctx, self.n, self.d, self.coeffs, self.trunc, names)

    def terms(self):
        """Yield ``(alpha, j, c)`` for every nonzero term, the Z^d term first."""
        yield (0,) * self.n, self.d, self.ctx.one
        for j in range(self.d - 1, -1, -1):
            for alpha, c in self.coeffs[j].sorted_terms():
                yield alpha, j, c

    def term_dict(self) -> dict:
        return {(alpha, j): c for alpha, j, c in self.terms()}

    def full_coeffs(self) -> list[XPoly]:
        return list(self.coeffs) + [XPoly.constant(self.ctx, self.n, 1)]

    def is_pure_power(self) -> bool:
        return all(not a for a in self.coeffs)

    def truncate(self, order: int | None) -> ZPoly:
        if order is None:
            return self
        new = order if self.trunc is None else min(order, self.trunc)
        return ZPoly(self.ctx, self.n, self.d, self.coeffs, new, self.names)

    def at_ones(self) -> UniPoly:
        """P(1, ..., 1, Z)."""
        return UniPoly(self.ctx, [a.at_ones() for a in self.coeffs] + [1])

    def at_zero(self) -> UniPoly:
        """P(0, ..., 0, Z)."""
        zero = (0,) * self.n
        return UniPoly(self.ctx, [a.coeff(zero) for a in self.coeffs] + [1])

    def scale_variables(self, scalars) -> ZPoly:
        """Substitute x_i -> scalars[i] * x_i."""
        scalars = [self.ctx(s) for s in scalars]
        new = []
        for a in self.coeffs:
            t = {}
            for e, c in a.terms.items():
                for s, k in zip(scalars, e):
                    c = c * s**k
                t[e] = c
            new.append(XPoly(self.ctx, self.n, t))
        return ZPoly(self.ctx, self.n, self.d, new, self.trunc, self.names)

    def __eq__(self, other):
        if not isinstance(other, ZPoly):
            return NotImplemented
        return (
            self.ctx == other.ctx
            and self.n == other.n
            and self.d == other.d
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.d, self.coeffs))

    def to_string(self, names=None) -> str:
        names = list(names or self.names) + ["Z"]
        terms = [(tuple(alpha) + (j,), c) for alpha, j, c in self.terms()]
        return format_terms(terms, names)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        tr = "" if self.trunc is None else f" mod (x)^{self.trunc}"
        return f"ZPoly({self.to_string()}{tr})"


def _order_min(a: int | None, b: int | None) -> int | None:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def zpoly_mul_trunc(A: ZPoly, B: ZPoly, order: int | None) -> ZPoly:
    """Product of two monic polynomials with coefficients truncated below total x-degree ``order``.

    The result's truncation is the smallest of ``order`` and the operands'.
    """
    if A.ctx != B.ctx or A.n != B.n:
        raise ValueError("operands over different rings")
    N = _order_min(order, _order_min(A.trunc, B.trunc))
    fa, fb = A.full_coeffs(), B.full_coeffs()
    d = A.d + B.d
    out = [XPoly.zero(A.ctx, A.n) for _ in range(d + 1)]
    for i, a in enumerate(fa):
        if not a:
            continue
        for j, b in enumerate(fb):
            if b:
                out[i + j] = out[i + j] + a.mul_trunc(b, N)
    return ZPoly(A.ctx, A.n, d, out[:d], N, A.names)


def grlex_sorted(terms):
    return sorted(terms, key=lambda t: grlex_key(t[0]))
