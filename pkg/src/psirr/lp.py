"""Exact two-phase simplex over Fractions with Bland's rule.

Instances here are tiny (a few dozen constraints), so a dense tableau is fine.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass
class LPResult:
    status: str  # "optimal", "infeasible" or "unbounded"
    x: list[Fraction] | None = None
    value: Fraction | None = None


def _pivot(T, basis, r, c):
    piv = T[r][c]
    row = [v / piv for v in T[r]]
    T[r] = row
    for i in range(len(T)):
        if i != r and T[i][c]:
            f = T[i][c]
            Ti = T[i]
            T[i] = [a - f * b for a, b in zip(Ti, row)]
    basis[r] = c


def _run(T, basis, allowed):
    """Maximize the objective in the last row (stored as reduced costs, negated)."""
    m = len(T) - 1
    while True:
        obj = T[m]
        col = next((j for j in allowed if obj[j] < 0), None)
        if col is None:
            return "optimal"
        best = None
        for i in range(m):
            a = T[i][col]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return "unbounded"
        _pivot(T, basis, best[1], col)


def linprog(c, A_ub=(), b_ub=(), A_eq=(), b_eq=()) -> LPResult:
    """Maximize ``c . x`` subject to ``A_ub x <= b_ub``, ``A_eq x = b_eq``, ``x >= 0``."""
    c = [Fraction(v) for v in c]
    nx = len(c)
    rows, rhs, slack_sign = [], [], []
    for a, b in zip(A_ub, b_ub):
        rows.append([Fraction(v) for v in a])
        rhs.append(Fraction(b))
        slack_sign.append(1)
    for a, b in zip(A_eq, b_eq):
        rows.append([Fraction(v) for v in a])
        rhs.append(Fraction(b))
        slack_sign.append(0)
    m = len(rows)
    n_slack = sum(1 for s in slack_sign if s)
    ncol = nx + n_slack + m  # structural, slacks, artificials
    T = []
    basis = []
    k = 0
    for i in range(m):
        row = rows[i] + [Fraction(0)] * (n_slack + m) + [rhs[i]]
        if slack_sign[i]:
            row[nx + k] = Fraction(1)
            k += 1
        if row[-1] < 0:
            row = [-v for v in row]
        row[nx + n_slack + i] = Fraction(1)
        T.append(row)
        basis.append(nx + n_slack + i)
    # phase 1: maximize -sum(artificials)
    obj = [Fraction(0)] * (ncol + 1)
    for j in range(nx + n_slack + m, ncol):
        obj[j] = Fraction(1)
    for i in range(m):
        obj = [a - b for a, b in zip(obj, T[i])]
    T.append(obj)
    _run(T, basis, range(nx + n_slack))
    if T[-1][-1] != 0:
        return LPResult("infeasible")
    # drive artificials out of the basis
    for i in range(m):
        if basis[i] >= nx + n_slack:
            col = next((j for j in range(nx + n_slack) if T[i][j]), None)
            if col is not None:
                _pivot(T, basis, i, col)
    keep = [i for i in range(m) if basis[i] < nx + n_slack]
    T2 = [T[i][: nx + n_slack] + [T[i][-1]] for i in keep]
    basis2 = [basis[i] for i in keep]
    obj = [-v for v in c] + [Fraction(0)] * n_slack + [Fraction(0)]
    for i, b in enumerate(basis2):
        if obj[b]:
            f = obj[b]
            obj = [a - f * r for a, r in zip(obj, T2[i])]
    T2.append(obj)
    status = _run(T2, basis2, range(nx + n_slack))
    if status == "unbounded":
        return LPResult("unbounded")
    x = [Fraction(0)] * (nx + n_slack)
    for i, b in enumerate(basis2):
        x[b] = T2[i][-1]
    return LPResult("optimal", x[:nx], T2[-1][-1])
