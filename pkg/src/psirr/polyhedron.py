"""Associated polyhedron, weight extension and weighted initial forms.

Points of the associated polyhedron are tuples of Fractions. For a term
c x^alpha Z^j with j < d the generator is d*alpha/(d - j); the polyhedron is
the convex hull of the generators plus the nonnegative orthant.

Weights are exact rationals. Real weights add nothing: the support is
finite, so every initial form attained by a real weight is attained by a
rational one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DegeneratePolynomial, NotApplicable, TruncationTooSmall
from .lp import linprog
from .zpoly import ZPoly


def fmt_rational(v: Fraction):
    v = Fraction(v)
    return v.numerator if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def point_json(p):
    return [fmt_rational(v) for v in p]


def support(P: ZPoly) -> list[tuple[tuple[int, ...], int, object]]:
    """Nonzero terms ``(alpha, j, c)`` of P, including the leading ``(0, d, 1)``."""
    return list(P.terms())


def _check_nondegenerate(P: ZPoly):
    if P.is_pure_power():
        raise DegeneratePolynomial(f"P = Z^{P.d} has no associated polyhedron")


def delta_generators(P: ZPoly) -> list[tuple[Fraction, ...]]:
    """One generator d*alpha/(d-j) per term with j < d (a multiset, in term order)."""
    _check_nondegenerate(P)
    d = P.d
    return [
        tuple(Fraction(d * a, d - j) for a in alpha)
        for alpha, j, _ in P.terms()
        if j < d
    ]


def _distinct(points):
    seen = []
    for p in points:
        p = tuple(Fraction(v) for v in p)
        if p not in seen:
            seen.append(p)
    return seen


def dominates(a, b) -> bool:
    """a <=_* b in the product order."""
    return all(x <= y for x, y in zip(a, b))


def orthant_check(G) -> tuple[Fraction, ...] | None:
    """The generator below all others in the product order, if there is one."""
    pts = _distinct(G)
    if not pts:
        raise ValueError("empty generator set")
    for g in pts:
        if all(dominates(g, h) for h in pts):
            return g
    return None


def _vertex_lp(g, others, n, equal_to=None):
    """Maximize eps over {w : sum w = 1, w_i >= eps, (h - g).w >= eps}.

    ``equal_to`` adds the constraint (equal_to - g).w = 0 (used for edges).
    Variables are (w_1..w_n, eps), all nonnegative.
    """
    A_ub, b_ub = [], []
    for i in range(n):
        row = [Fraction(0)] * (n + 1)
        row[i] = Fraction(-1)
        row[n] = Fraction(1)
        A_ub.append(row)
        b_ub.append(0)
    for h in others:
        A_ub.append([-(hi - gi) for hi, gi in zip(h, g)] + [Fraction(1)])
        b_ub.append(0)
    A_ub.append([Fraction(0)] * n + [Fraction(1)])
    b_ub.append(1)
    A_eq = [[Fraction(1)] * n + [Fraction(0)]]
    b_eq = [1]
    if equal_to is not None:
        A_eq.append([hi - gi for hi, gi in zip(equal_to, g)] + [Fraction(0)])
        b_eq.append(0)
    res = linprog([0] * n + [1], A_ub, b_ub, A_eq, b_eq)
    if res.status != "optimal" or res.value <= 0:
        return None
    return tuple(res.x[:n])


@dataclass(frozen=True)
class DeltaPolyhedron:
    generators: tuple[tuple[Fraction, ...], ...]
    vertices: tuple[tuple[Fraction, ...], ...]
    witnesses: dict = field(default_factory=dict, compare=False)

    @property
    def n(self) -> int:
        return len(self.generators[0])

    def is_orthant(self) -> bool:
        return len(self.vertices) == 1

    def to_json(self) -> dict:
        return {
            "generators": [point_json(g) for g in self.generators],
            "vertices": [point_json(v) for v in self.vertices],
            "witnesses": [
                {"vertex": point_json(v), "weight": point_json(self.witnesses[v])}
                for v in self.vertices
            ],
        }


def delta_vertices(G) -> DeltaPolyhedron:
    """Vertices of conv(G) + orthant, each with a strictly positive weight that
    it alone minimizes among the generators.

    Vertices are listed in decreasing lexicographic order.
    """
    gens = tuple(tuple(Fraction(v) for v in g) for g in G)
    pts = _distinct(gens)
    if not pts:
        raise ValueError("empty generator set")
    n = len(pts[0])
    vertices, witnesses = [], {}
    for g in pts:
        # a point above another generator is never the unique minimizer
        if any(h != g and dominates(h, g) for h in pts):
            continue
        w = _vertex_lp(g, [h for h in pts if h != g], n)
        if w is not None:
            vertices.append(g)
            witnesses[g] = w
    vertices.sort(reverse=True)
    return DeltaPolyhedron(gens, tuple(vertices), witnesses)


def hull_certificate(g, vertices):
    """Convex weights lam with sum(lam_v * v) <=_* g, or None if g is outside."""
    vertices = [tuple(Fraction(x) for x in v) for v in vertices]
    n = len(g)
    k = len(vertices)
    A_ub = [[v[i] for v in vertices] for i in range(n)]
    b_ub = [Fraction(x) for x in g]
    res = linprog([0] * k, A_ub, b_ub, [[1] * k], [1])
    if res.status != "optimal":
        return None
    return res.x


def adjacent_vertices(delta: DeltaPolyhedron):
    """First pair of vertices (in vertex order) joined by an edge of the polyhedron."""
    V = list(delta.vertices)
    n = delta.n
    for i in range(len(V)):
        for j in range(i + 1, len(V)):
            others = [h for k, h in enumerate(V) if k not in (i, j)]
            if _vertex_lp(V[i], others, n, equal_to=V[j]) is not None:
                return V[i], V[j]
    raise NotApplicable("no edge between vertices found")


@dataclass(frozen=True)
class WeightVec:
    """Strictly positive weights on x, plus the induced weight on Z once known."""

    omega: tuple[Fraction, ...]
    last: Fraction | None = None

    def __post_init__(self):
        object.__setattr__(self, "omega", tuple(Fraction(w) for w in self.omega))
        if any(w <= 0 for w in self.omega):
            raise ValueError("weights must be strictly positive")
        if self.last is not None:
            object.__setattr__(self, "last", Fraction(self.last))

    def extended(self) -> tuple[Fraction, ...]:
        if self.last is None:
            raise ValueError("weight has not been extended")
        return self.omega + (self.last,)

    def to_json(self) -> dict:
        out = {"omega": point_json(self.omega)}
        if self.last is not None:
            out["omega_extension"] = fmt_rational(self.last)
        return out


def omega_extension(P: ZPoly, omega) -> WeightVec:
    """Extend omega by min{v.omega : v in the associated polyhedron} / d."""
    w = omega if isinstance(omega, WeightVec) else WeightVec(tuple(omega))
    gens = delta_generators(P)
    m = min(sum(a * b for a, b in zip(g, w.omega)) for g in gens)
    return WeightVec(w.omega, m / P.d)


def initial_form(P: ZPoly, omega) -> ZPoly:
    """Sum of the terms of P of minimal extended weight (always includes Z^d)."""
    w = omega if isinstance(omega, WeightVec) and omega.last is not None else omega_extension(P, omega)
    level = P.d * w.last
    if P.trunc is not None and not P.trunc * min(w.omega) > level:
        raise TruncationTooSmall(
            f"order {P.trunc} cannot resolve terms of weight {level} for weights {point_json(w.omega)}"
        )
    wext = w.extended()
    keep = {}
    for alpha, j, c in P.terms():
        if j < P.d and sum(a * b for a, b in zip(alpha + (j,), wext)) == level:
            keep[(alpha, j)] = c
    return ZPoly.from_terms(P.ctx, P.n, P.d, keep, None, P.names)


def face_witness(P: ZPoly, delta: DeltaPolyhedron | None = None):
    """Three support points of the Newton polyhedron spanning a 2-dimensional face.

    ``a = (0, d)``; b and c are the support points projecting to two adjacent
    vertices of the associated polyhedron (for each, the term with least j).
    """
    if delta is None:
        delta = delta_vertices(delta_generators(P))
    if len(delta.vertices) < 2:
        raise NotApplicable("the associated polyhedron has a single vertex")
    v1, v2 = adjacent_vertices(delta)
    d = P.d

    def lift(v):
        for alpha, j, _ in sorted(P.terms(), key=lambda t: t[1]):
            if j < d and tuple(Fraction(d * a, d - j) for a in alpha) == v:
                return tuple(alpha) + (j,)
        raise AssertionError(f"vertex {v} has no support point")

    a = (0,) * P.n + (d,)
    return a, lift(v1), lift(v2)
