"""Constructive splitting: substitute, lift, recompose, descend, verify.

Given P whose associated polyhedron is d*gamma + orthant, gamma = beta/q, and a
coprime split P_bar = P1_bar * P2_bar of the dehomogenized initial form:

1. ``substitute_and_normalize``: S(x, Z) = P(x^q, x^beta Z) / x^(d beta),
   so S = P_bar mod (x).
2. ``hensel_lift``: S = T1 * T2 modulo (x)^N, graded by total x-degree.
3. ``recompose``: x^(d_i beta) T_i(x, Z) = R_i(x, x^beta Z).
4. ``descend_lattice``: R_i(x, Z) = F_i(x^q, Z), which requires every
   exponent of R_i to be divisible by q.
5. ``verify_certificate``: F1 * F2 = P modulo (x)^N' by exact multiplication.

Everything is checked to finite order only; certificates say so.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import (
    InputError,
    InternalAssertion,
    LatticeViolation,
    NegativeExponent,
    NotCoprimeSeeds,
    RecompositionFailure,
    TruncationTooSmall,
    VerificationFailed,
)
from .printing import format_monomial
from .upoly import UniPoly, ext_gcd
from .xpoly import XPoly
from .zpoly import ZPoly, zpoly_mul_trunc


def substitute_and_normalize(P: ZPoly, q: int, beta, order: int) -> ZPoly:
    """S(x, Z) = P(x1^q, ..., xn^q, x^beta Z) / x^(d beta), modulo (x)^order.

    A term c x^alpha Z^j goes to c x^(q alpha + j beta - d beta) Z^j.
    """
    beta = tuple(beta)
    d = P.d
    if P.trunc is not None and q * P.trunc - d * sum(beta) < order:
        raise TruncationTooSmall(
            f"P known to order {P.trunc} determines the substituted polynomial only "
            f"below order {q * P.trunc - d * sum(beta)}, not {order}"
        )
    terms = {}
    for alpha, j, c in P.terms():
        if j == d:
            continue
        e = tuple(q * a + (j - d) * b for a, b in zip(alpha, beta))
        if any(k < 0 for k in e):
            raise NegativeExponent(
                f"term x^{alpha} Z^{j} maps to exponent {e}: not above the orthant"
            )
        if sum(e) < order:
            terms[(e, j)] = c
    return ZPoly.from_terms(P.ctx, P.n, d, terms, order, P.names)


def _uni_mul_graded(a, b, d_out):
    """Multiply polynomials in Z given as lists of {exps: c} dicts."""
    out = [dict() for _ in range(d_out)]
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            if not bj or i + j >= d_out:
                continue
            slot = out[i + j]
            for e1, c1 in ai.items():
                for e2, c2 in bj.items():
                    e = tuple(x + y for x, y in zip(e1, e2))
                    s = slot.get(e)
                    slot[e] = c1 * c2 if s is None else s + c1 * c2
    return out


@dataclass
class LiftState:
    """Mutable lifting state, confined to one ``hensel_lift`` call."""

    target: ZPoly
    seeds: tuple[UniPoly, UniPoly]
    bezout: tuple[UniPoly, UniPoly]
    order: int
    stage: int = 0
    # graded[i][k][j] = {exps: c}: degree-k part of the Z^j coefficient of factor i
    graded: list = field(default_factory=list)
    checked_stages: list = field(default_factory=list)

    def factor(self, i: int) -> ZPoly:
        seed = self.seeds[i]
        di = seed.degree
        ctx, n = self.target.ctx, self.target.n
        coeffs = []
        for j in range(di):
            t = {}
            for layer in self.graded[i]:
                t.update(layer[j])
            coeffs.append(XPoly(ctx, n, t))
        return ZPoly(ctx, n, di, coeffs, self.order, self.target.names)


def hensel_lift(
    S: ZPoly,
    seed1: UniPoly,
    seed2: UniPoly,
    order: int,
    check: bool = False,
    state_out: list | None = None,
) -> tuple[ZPoly, ZPoly]:
    """Lift S = seed1 * seed2 mod (x) to S = T1 * T2 mod (x)^order.

    Stage k solves E_k = seed2 * A + seed1 * B for the degree-k defect E_k,
    monomial by monomial, with A = (E_k * t) mod seed1 where s*seed1 + t*seed2 = 1.
    With ``check`` the invariant T1*T2 = S mod (x)^(k+1) is verified after
    every stage. The final ``LiftState`` is appended to ``state_out`` if given.
    """
    ctx, n, d = S.ctx, S.n, S.d
    if not (seed1.is_monic() and seed2.is_monic()):
        raise InputError("seeds must be monic")
    if seed1.degree + seed2.degree != d or seed1.degree < 1 or seed2.degree < 1:
        raise InputError("seed degrees must be positive and add up to deg S")
    if seed1 * seed2 != S.at_zero():
        raise InputError("seeds do not multiply to S modulo (x)")
    g, s, t = ext_gcd(seed1, seed2)
    if not g.is_one():
        raise NotCoprimeSeeds(f"gcd(seed1, seed2) = {g}")
    if S.trunc is not None and S.trunc < order:
        raise TruncationTooSmall(f"S is only known to order {S.trunc}")
    d1, d2 = seed1.degree, seed2.degree
    zero_e = (0,) * n
    st = LiftState(S, (seed1, seed2), (s, t), order)
    st.graded = [
        [[{zero_e: seed1[j]} if seed1[j] else {} for j in range(d1 + 1)]],
        [[{zero_e: seed2[j]} if seed2[j] else {} for j in range(d2 + 1)]],
    ]
    # homogeneous layers of S, Z^d term excluded (it is matched by the seeds)
    s_layers: dict[int, list[dict]] = {}
    for j, a in enumerate(S.coeffs):
        for e, c in a.terms.items():
            k = sum(e)
            if k == 0:
                continue
            s_layers.setdefault(k, [dict() for _ in range(d)])[j][e] = c
    for k in range(1, order):
        defect = [dict(layer) for layer in s_layers.get(k, [dict() for _ in range(d)])]
        for a in range(0, k + 1):
            b = k - a
            if a >= len(st.graded[0]) or b >= len(st.graded[1]):
                continue
            prod = _uni_mul_graded(st.graded[0][a], st.graded[1][b], d)
            for j in range(d):
                slot = defect[j]
                for e, c in prod[j].items():
                    v = slot.get(e)
                    slot[e] = -c if v is None else v - c
        by_mono: dict = {}
        for j in range(d):
            for e, c in defect[j].items():
                if c:
                    by_mono.setdefault(e, [ctx.zero] * d)[j] = c
        new1 = [dict() for _ in range(d1 + 1)]
        new2 = [dict() for _ in range(d2 + 1)]
        for e in sorted(by_mono):
            ev = UniPoly(ctx, by_mono[e])
            A = (ev * t) % seed1
            B = (ev - seed2 * A).exact_div(seed1)
            for j, c in enumerate(A.coeffs):
                if c:
                    new1[j][e] = c
            for j, c in enumerate(B.coeffs):
                if c:
                    new2[j][e] = c
        st.graded[0].append(new1)
        st.graded[1].append(new2)
        st.stage = k
        if check:
            T1, T2 = st.factor(0), st.factor(1)
            if zpoly_mul_trunc(T1, T2, k + 1) != S.truncate(k + 1):
                raise InternalAssertion(f"lift invariant broken at stage {k}")
            st.checked_stages.append(k)
    if state_out is not None:
        state_out.append(st)
    return st.factor(0), st.factor(1)


def recompose(T: ZPoly, beta, d_i: int | None = None) -> ZPoly:
    """R with x^(d_i beta) T(x, Z) = R(x, x^beta Z): c x^e Z^j -> c x^(e + (d_i - j) beta) Z^j."""
    beta = tuple(beta)
    d_i = T.d if d_i is None else d_i
    if d_i != T.d:
        raise RecompositionFailure(f"degree {T.d} does not match d_i = {d_i}")
    order = T.trunc
    terms = {}
    for e, j, c in T.terms():
        if j > d_i:
            raise RecompositionFailure(f"term x^{e} Z^{j} above degree {d_i}")
        if j == d_i:
            if any(e) or c != 1:
                raise RecompositionFailure("factor is not monic")
            continue
        new = tuple(a + (d_i - j) * b for a, b in zip(e, beta))
        if order is None or sum(new) < order:
            terms[(new, j)] = c
    return ZPoly.from_terms(T.ctx, T.n, d_i, terms, order, T.names)


def descend_lattice(R: ZPoly, q: int) -> ZPoly:
    """F with F(x1^q, ..., xn^q, Z) = R, checking divisibility of every known exponent."""
    terms = {}
    for e, j, c in R.terms():
        if j == R.d:
            continue
        if any(k % q for k in e):
            raise LatticeViolation(e + (j,), q)
        terms[(tuple(k // q for k in e), j)] = c
    order = None if R.trunc is None else -(-R.trunc // q)
    return ZPoly.from_terms(R.ctx, R.n, R.d, terms, order, R.names)


@dataclass
class CheckReport:
    order: int
    checks: dict

    def to_json(self) -> dict:
        return {"order": self.order, "checks": dict(self.checks)}


def verify_certificate(P: ZPoly, F1: ZPoly, F2: ZPoly, order: int, checks: dict | None = None) -> CheckReport:
    """Confirm F1 * F2 = P modulo (x)^order, raising ``VerificationFailed`` on the first mismatch."""
    if F1.d + F2.d != P.d:
        raise VerificationFailed(f"degrees {F1.d} + {F2.d} != {P.d}")
    for F in (F1, F2):
        if F.trunc is not None and F.trunc < order:
            raise VerificationFailed(f"factor known only to order {F.trunc} < {order}")
    if P.trunc is not None and P.trunc < order:
        raise VerificationFailed(f"P known only to order {P.trunc} < {order}")
    prod = zpoly_mul_trunc(F1, F2, order)
    target = P.truncate(order)
    if prod != target:
        got, want = prod.term_dict(), target.term_dict()
        names = list(P.names) + ["Z"]
        for key in sorted(set(got) | set(want), key=lambda k: (-k[1], sum(k[0]), tuple(-a for a in k[0]))):
            a, b = got.get(key, P.ctx.zero), want.get(key, P.ctx.zero)
            if a != b:
                alpha, j = key
                term = format_monomial(tuple(alpha) + (j,), names) or "1"
                raise VerificationFailed(
                    f"F1*F2 has coefficient {a} at {term}, P has {b}", (alpha, j, a, b)
                )
    report = {"congruence": True}
    if checks:
        report.update(checks)
    return CheckReport(order, report)


@dataclass
class Certificate:
    """Two monic factors with F1 * F2 = P verified modulo (x)^order."""

    F1: ZPoly
    F2: ZPoly
    q: int
    beta: tuple[int, ...]
    order: int
    lift_order: int
    seeds: tuple[UniPoly, UniPoly]
    checks: dict

    def verify(self, P: ZPoly) -> CheckReport:
        return verify_certificate(P, self.F1, self.F2, self.order, self.checks)

    def to_json(self, names=None) -> dict:
        return {
            "F1": self.F1.to_string(names),
            "F2": self.F2.to_string(names),
            "degrees": [self.F1.d, self.F2.d],
            "q": self.q,
            "beta": list(self.beta),
            "verified_order": self.order,
            "lift_order": self.lift_order,
            "seeds": [self.seeds[0].to_string("Z"), self.seeds[1].to_string("Z")],
            "checks": dict(self.checks),
        }


def certified_order(P: ZPoly, d_gamma, requested: int) -> int:
    """Largest certifiable order <= requested given P's truncation."""
    if P.trunc is None:
        return requested
    return min(requested, P.trunc - math.ceil(sum(d_gamma)))


def certify_split(
    P: ZPoly,
    seed1: UniPoly,
    seed2: UniPoly,
    q: int,
    beta,
    order: int,
    check: bool = False,
    states: list | None = None,
) -> Certificate:
    """Run substitute -> lift -> recompose -> descend -> verify for a coprime seed split."""
    if order < 1:
        raise TruncationTooSmall(f"certificate order {order} < 1")
    beta = tuple(beta)
    lift_order = q * order
    S = substitute_and_normalize(P, q, beta, lift_order)
    T1, T2 = hensel_lift(S, seed1, seed2, lift_order, check=check, state_out=states)
    R1 = recompose(T1, beta, seed1.degree)
    R2 = recompose(T2, beta, seed2.degree)
    F1 = descend_lattice(R1, q).truncate(order)
    F2 = descend_lattice(R2, q).truncate(order)
    checks = {
        "seeds_coprime": True,
        "recomposition_exact": True,
        "lattice_divisible": True,
        "lift_stages_checked": check,
    }
    report = verify_certificate(P, F1, F2, order, checks)
    return Certificate(F1, F2, q, beta, order, lift_order, (seed1, seed2), report.checks)
