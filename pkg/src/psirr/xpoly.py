"""Sparse multivariate polynomials in x = (x1, ..., xn).

Also used as truncated power series: truncation always counts total
x-degree, i.e. works modulo powers of the ideal (x1, ..., xn).
"""

from __future__ import annotations

from .fields import FieldCtx
from .printing import format_terms


def grlex_key(exps):
    """Ascending total degree, then x1-heavy monomials first within a degree."""
    return (sum(exps), tuple(-e for e in exps))


class XPoly:
    __slots__ = ("ctx", "n", "terms")

    def __init__(self, ctx: FieldCtx, n: int, terms=None):
        self.ctx = ctx
        self.n = n
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for e, c in items:
                e = tuple(e)
                if len(e) != n or any(k < 0 for k in e):
                    raise ValueError(f"bad exponent {e} for {n} variables")
                c = ctx(c)
                if e in clean:
                    c = clean[e] + c
                if c:
                    clean[e] = c
                else:
                    clean.pop(e, None)
        self.terms = clean

    @classmethod
    def _raw(cls, ctx, n, terms):
        obj = cls.__new__(cls)
        obj.ctx = ctx
        obj.n = n
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls, ctx, n) -> XPoly:
        return cls._raw(ctx, n, {})

    @classmethod
    def constant(cls, ctx, n, c) -> XPoly:
        return cls(ctx, n, {(0,) * n: c})

    @classmethod
    def monomial(cls, ctx, exps, c=1) -> XPoly:
        return cls(ctx, len(exps), {tuple(exps): c})

    @classmethod
    def var(cls, ctx, n, i) -> XPoly:
        e = [0] * n
        e[i] = 1
        return cls(ctx, n, {tuple(e): 1})

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, XPoly):
            return self.n == other.n and self.ctx == other.ctx and self.terms == other.terms
        if isinstance(other, int):
            return self == XPoly.constant(self.ctx, self.n, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def coeff(self, exps):
        return self.terms.get(tuple(exps), self.ctx.zero)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]))

    def _check(self, other):
        if not isinstance(other, XPoly):
            return XPoly.constant(self.ctx, self.n, other)
        if other.n != self.n or other.ctx != self.ctx:
            raise ValueError("incompatible polynomials")
        return other

    def __add__(self, other):
        other = self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            s = c if s is None else s + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return XPoly._raw(self.ctx, self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return XPoly._raw(self.ctx, self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def mul_trunc(self, other, order: int | None = None) -> XPoly:
        """Product, dropping terms of total degree >= ``order`` (None = exact)."""
        other = self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            d1 = sum(e1)
            if order is not None and d1 >= order:
                continue
            for e2, c2 in other.terms.items():
                if order is not None and d1 + sum(e2) >= order:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e)
                out[e] = c1 * c2 if s is None else s + c1 * c2
        return XPoly._raw(self.ctx, self.n, {e: c for e, c in out.items() if c})

    def __mul__(self, other):
        if not isinstance(other, XPoly):
            c = self.ctx(other)
            if not c:
                return XPoly.zero(self.ctx, self.n)
            return XPoly._raw(self.ctx, self.n, {e: v * c for e, v in self.terms.items()})
        return self.mul_trunc(other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = XPoly.constant(self.ctx, self.n, 1)
        for _ in range(k):
            out = out * self
        return out

    def truncate(self, order: int | None) -> XPoly:
        if order is None:
            return self
        return XPoly._raw(
            self.ctx, self.n, {e: c for e, c in self.terms.items() if sum(e) < order}
        )

    def homogeneous_part(self, k: int) -> XPoly:
        return XPoly._raw(self.ctx, self.n, {e: c for e, c in self.terms.items() if sum(e) == k})

    def order(self) -> int | None:
        """Lowest total degree (x-adic valuation); None for zero."""
        return min((sum(e) for e in self.terms), default=None)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def shift(self, exps) -> XPoly:
        """Multiply by the monomial x^exps."""
        return XPoly._raw(
            self.ctx,
            self.n,
            {tuple(a + b for a, b in zip(e, exps)): c for e, c in self.terms.items()},
        )

    def weighted_order(self, w):
        return min((sum(a * b for a, b in zip(e, w)) for e in self.terms), default=None)

    def at_ones(self):
        """Evaluate at x = (1, ..., 1)."""
        acc = self.ctx.zero
        for c in self.terms.values():
            acc = acc + c
        return acc

    def to_string(self, names=None) -> str:
        names = names or default_names(self.n)
        return format_terms(self.sorted_terms(), names)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"XPoly({self.to_string()})"


def default_names(n: int) -> list[str]:
    if n == 1:
        return ["x"]
    if n == 2:
        return ["x", "y"]
    if n == 3:
        return ["x", "y", "z"]
    return [f"x{i + 1}" for i in range(n)]
