"""Brute-force oracles for degree-2 inputs, independent of the criterion pipeline.

``series_sqrt`` solves s^2 = a layer by layer in total degree; ``factor_d2``
splits Z^2 + bZ + c through the square root of its discriminant. Neither
shares code with the criterion pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CharacteristicTwo, InputError
from .xpoly import XPoly
from .zpoly import ZPoly


@dataclass
class SeriesSqrtResult:
    """Either ``root`` (known modulo (x)^root_order) or an obstruction."""

    root: XPoly | None
    root_order: int | None = None
    obstruction_degree: int | None = None
    obstruction: str | None = None

    @property
    def ok(self) -> bool:
        return self.root is not None


def _lead(p: XPoly):
    """Largest term in graded-lex order (highest degree, x1-heavy first)."""
    e = max(p.terms, key=lambda t: (sum(t), t))
    return e, p.terms[e]


def homogeneous_sqrt(h: XPoly) -> XPoly | None:
    """Square root of a homogeneous polynomial, or None.

    Undetermined coefficients solved triangularly: the leading monomial of the
    root is half that of h, and each further root term is fixed by the leading
    term of the current remainder. Termination: root terms strictly decrease
    among the finitely many monomials of one degree.
    """
    ctx = h.ctx
    if not h:
        return h
    e0, c0 = _lead(h)
    if any(k % 2 for k in e0):
        return None
    r0 = ctx.sqrt(c0)
    if r0 is None:
        return None
    s_lead = tuple(k // 2 for k in e0)
    root = XPoly.monomial(ctx, s_lead, r0)
    two_lead = 2 * r0
    last = s_lead
    while True:
        rem = h - root * root
        if not rem:
            return root
        e, c = _lead(rem)
        mono = tuple(a - b for a, b in zip(e, s_lead))
        if any(k < 0 for k in mono) or not mono < last:
            return None
        root = root + XPoly.monomial(ctx, mono, c / two_lead)
        last = mono


def _exact_divide(num: XPoly, den: XPoly) -> XPoly | None:
    """num / den in k[x] if den divides num, else None (single-divisor division)."""
    if not num:
        return num
    ctx = num.ctx
    e_den, c_den = _lead(den)
    quo = XPoly.zero(ctx, num.n)
    rem = num
    while rem:
        e, c = _lead(rem)
        t = tuple(a - b for a, b in zip(e, e_den))
        if any(k < 0 for k in t):
            return None
        step = XPoly.monomial(ctx, t, c / c_den)
        quo = quo + step
        rem = rem - step * den
    return quo


def series_sqrt(a: XPoly, order: int) -> SeriesSqrtResult:
    """Find s with s^2 = a modulo (x)^order.

    If the lowest nonzero homogeneous part of a has degree v = 2h, s is
    determined modulo (x)^(order - h): layer k solves
    2 s_0 s_k = a_(v+k) - sum_(0<i,j<k, i+j=k) s_i s_j by exact division.
    """
    ctx = a.ctx
    if ctx.characteristic == 2:
        raise CharacteristicTwo("square roots of series need characteristic != 2")
    a = a.truncate(order)
    v = a.order()
    if v is None:
        raise InputError("series is zero to the requested order")
    if v % 2:
        return SeriesSqrtResult(None, obstruction_degree=v, obstruction=f"lowest degree {v} is odd")
    h = v // 2
    s0 = homogeneous_sqrt(a.homogeneous_part(v))
    if s0 is None:
        return SeriesSqrtResult(
            None,
            obstruction_degree=v,
            obstruction=f"lowest form {a.homogeneous_part(v)} is not a square",
        )
    layers = [s0]
    two_s0 = s0 * 2
    for k in range(1, order - v):
        rhs = a.homogeneous_part(v + k)
        for i in range(1, k):
            rhs = rhs - layers[i] * layers[k - i]
        sk = _exact_divide(rhs, two_s0)
        if sk is None:
            return SeriesSqrtResult(
                None,
                obstruction_degree=v + k,
                obstruction=f"degree {v + k}: {rhs} is not divisible by {two_s0}",
            )
        layers.append(sk)
    root = XPoly.zero(ctx, a.n)
    for layer in layers:
        root = root + layer
    return SeriesSqrtResult(root.truncate(order - h), root_order=order - h)


def factor_d2(P: ZPoly, order: int):
    """Split Z^2 + bZ + c in k[[x]][Z] modulo (x)^order via the discriminant's root.

    Returns ``(F1, F2)`` with roots (-b + s)/2 and (-b - s)/2, or a
    ``SeriesSqrtResult`` describing the obstruction.
    """
    if P.d != 2:
        raise InputError("factor_d2 handles degree 2 only")
    ctx = P.ctx
    if ctx.characteristic == 2:
        raise CharacteristicTwo("discriminant method needs characteristic != 2")
    c, b = P.coeffs
    if P.trunc is not None and P.trunc < order:
        raise InputError(f"P known only to order {P.trunc}")
    disc = b * b - c * 4
    if not disc:
        s = XPoly.zero(ctx, P.n)
    else:
        v = disc.order()
        need = order + v // 2
        if P.trunc is not None and P.trunc < need:
            need = P.trunc
        res = series_sqrt(disc, need)
        if not res.ok:
            return res
        if res.root_order < order:
            raise InputError(f"discriminant known too coarsely for order {order}")
        s = res.root.truncate(order)
    half = ctx(1) / 2
    r1 = (s - b) * half
    r2 = (-s - b) * half
    F1 = ZPoly(ctx, P.n, 1, [-r1], order, P.names)
    F2 = ZPoly(ctx, P.n, 1, [-r2], order, P.names)
    return F1, F2
