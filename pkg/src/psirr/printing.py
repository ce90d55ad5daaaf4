"""Canonical text form shared by every polynomial type.

Terms are joined by `` + `` / `` - ``, monomials read ``c*x1^a1*...*Z^j`` and
rational coefficients print as ``p/q``. Prime-field coefficients print as
their least nonnegative residue, so no minus signs appear over F_p.
"""

from __future__ import annotations

from fractions import Fraction


def format_coeff(c) -> str:
    if isinstance(c, Fraction):
        if c.denominator == 1:
            return str(c.numerator)
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def format_monomial(exps, names) -> str:
    parts = []
    for e, name in zip(exps, names):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_terms(terms, names) -> str:
    """Render ``[(exps, coeff), ...]`` in the given order."""
    pieces = []
    for exps, c in terms:
        s = format_coeff(c)
        negative = s.startswith("-")
        if negative:
            s = s[1:]
        mono = format_monomial(exps, names)
        if mono:
            body = mono if s == "1" else f"{s}*{mono}"
        else:
            body = s
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return "".join(pieces) if pieces else "0"
