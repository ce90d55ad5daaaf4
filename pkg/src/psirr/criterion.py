"""The reducibility test for monic P in k[[x]][Z] whose associated polyhedron is a shifted orthant.

When the associated polyhedron is d*gamma + orthant, the initial form P_In
does not depend on the weight. If P_In splits into two coprime factors then
P is reducible, and the split is made explicit by Hensel lifting. The test
runs through the segment polynomial Q(T), where P_In = x^(d gamma) Q(y^u),
y = (x, Z) and m*u = (-d gamma, d) with u primitive: a coprime split of Q
gives a coprime split of P_In, so no multivariate factorization is needed.
The one shape where Q is undefined (no Z^0 term on the segment, so Z^s
divides P_In) splits as Z^s * H directly.

The test is one-directional. When it does not fire the verdict is
``Inconclusive``, never "irreducible".
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DegreeBoundExceeded, SupportOffLattice, TruncationTooSmall
from .factor import DEFAULT_DEGREE_BOUND, DEFAULT_SEED, coprime_split, power_base
from .hensel import Certificate, certified_order, certify_split
from .polyhedron import (
    DeltaPolyhedron,
    delta_generators,
    delta_vertices,
    face_witness,
    orthant_check,
    point_json,
)
from .upoly import UniPoly
from .zpoly import ZPoly

REDUCIBLE = "Reducible"
INCONCLUSIVE = "Inconclusive"
NOT_APPLICABLE = "NotApplicable"
UNDECIDED = "Undecided"

DEFAULT_ORDER = 16


def gamma_decompose(d_gamma, d: int) -> tuple[tuple[Fraction, ...], tuple[int, ...], int]:
    """gamma = d_gamma / d written as beta / q with gcd(beta_1, ..., beta_n, q) = 1."""
    gamma = tuple(Fraction(v) / d for v in d_gamma)
    q = 1
    for g in gamma:
        q = q * g.denominator // math.gcd(q, g.denominator)
    beta = tuple(int(g * q) for g in gamma)
    return gamma, beta, q


@dataclass(frozen=True)
class OrthantData:
    d_gamma: tuple[Fraction, ...]
    gamma: tuple[Fraction, ...]
    beta: tuple[int, ...]
    q: int
    u: tuple[int, ...] | None = None
    m: int | None = None

    def to_json(self) -> dict:
        return {
            "d_gamma": point_json(self.d_gamma),
            "gamma": point_json(self.gamma),
            "beta": list(self.beta),
            "q": self.q,
            "u": None if self.u is None else list(self.u),
            "m": self.m,
        }


def orthant_data(d_gamma, d: int) -> OrthantData:
    """All combinatorial data; u and m only when d_gamma is integral."""
    d_gamma = tuple(Fraction(v) for v in d_gamma)
    gamma, beta, q = gamma_decompose(d_gamma, d)
    u = m = None
    if all(v.denominator == 1 for v in d_gamma):
        ints = [int(v) for v in d_gamma]
        m = d
        for v in ints:
            m = math.gcd(m, v)
        u = tuple(-v // m for v in ints) + (d // m,)
    return OrthantData(d_gamma, gamma, beta, q, u, m)


def compute_p_in(P: ZPoly, d_gamma) -> ZPoly:
    """Z^d plus the terms with alpha / (d - j) = gamma, i.e. d*alpha = (d - j)*d_gamma."""
    d = P.d
    dg = tuple(Fraction(v) for v in d_gamma)
    keep = {}
    for alpha, j, c in P.terms():
        if j < d and all(d * a == (d - j) * g for a, g in zip(alpha, dg)):
            keep[(alpha, j)] = c
    return ZPoly.from_terms(P.ctx, P.n, d, keep, None, P.names)


@dataclass(frozen=True)
class EndpointCheck:
    endpoint: bool
    s: int = 0  # Z-adic valuation of P_In when the endpoint is missing

    def to_json(self) -> dict:
        if self.endpoint:
            return {"kind": "Endpoint"}
        return {"kind": "MissingEndpoint", "s": self.s}


def segment_endpoint_check(P_in: ZPoly, d_gamma) -> EndpointCheck:
    """Is the term x^(d gamma) Z^0 present in P_In? If not, report s with Z^s || P_In."""
    dg = tuple(Fraction(v) for v in d_gamma)
    if all(v.denominator == 1 for v in dg):
        if P_in.coeffs[0].coeff(tuple(int(v) for v in dg)):
            return EndpointCheck(True)
    s = min(j for _, j, _ in P_in.terms())
    return EndpointCheck(False, s)


def extract_q_poly(P_in: ZPoly, data: OrthantData) -> UniPoly:
    """Q(T) = T^m + sum c_i T^i, c_i the coefficient of P_In at (d gamma, 0) + i*u."""
    if data.u is None:
        raise SupportOffLattice("d*gamma is not integral; Q(T) is undefined")
    n = P_in.n
    dg = [int(v) for v in data.d_gamma]
    u, m = data.u, data.m
    coeffs = [P_in.ctx.zero] * (m + 1)
    for alpha, j, c in P_in.terms():
        i, r = divmod(j, u[n])
        point = tuple(a - g for a, g in zip(alpha, dg)) + (j,)
        if r or point != tuple(i * v for v in u):
            raise SupportOffLattice(f"term x^{alpha} Z^{j} is off the segment lattice")
        coeffs[i] = c
    return UniPoly(P_in.ctx, coeffs)


def reconstruct_p_in(Q: UniPoly, data: OrthantData, template: ZPoly) -> ZPoly:
    """x^(d gamma) Q(y^u) expanded term by term."""
    n = template.n
    dg = [int(v) for v in data.d_gamma]
    terms = {}
    for i, c in enumerate(Q.coeffs):
        if c:
            e = tuple(g + i * v for g, v in zip(dg, data.u))
            terms[(e, i * data.u[n])] = c
    return ZPoly.from_terms(template.ctx, n, template.d, terms, None, template.names)


@dataclass
class Verdict:
    kind: str
    reason: dict = field(default_factory=dict)
    certificate: Certificate | None = None
    orthant: OrthantData | None = None
    q_poly: UniPoly | None = None
    p_in: ZPoly | None = None
    delta: DeltaPolyhedron | None = None

    def __post_init__(self):
        if (self.certificate is not None) != (self.kind == REDUCIBLE):
            raise ValueError("a certificate is attached exactly to Reducible verdicts")

    def to_json(self, names=None) -> dict:
        return {
            "kind": self.kind,
            "orthant": None if self.orthant is None else self.orthant.to_json(),
            "Q": None if self.q_poly is None else self.q_poly.to_string("T"),
            "P_in": None if self.p_in is None else self.p_in.to_string(names),
            "reason": self.reason,
            "certificate": None if self.certificate is None else self.certificate.to_json(names),
        }


def apply_criterion(
    P: ZPoly,
    order: int = DEFAULT_ORDER,
    degree_bound: int = DEFAULT_DEGREE_BOUND,
    seed: int = DEFAULT_SEED,
    check: bool = False,
    lift_states: list | None = None,
) -> Verdict:
    """Decide what the criterion says about P.

    ``order`` is the requested certificate order N'; for truncated P it is
    capped by what P's truncation determines. ``check`` verifies the Hensel
    stage invariant at every stage.
    """
    G = delta_generators(P)
    d_gamma = orthant_check(G)
    if d_gamma is None:
        delta = delta_vertices(G)
        a, b, c = face_witness(P, delta)
        reason = {
            "vertices": [point_json(v) for v in delta.vertices],
            "face_witness": [list(a), list(b), list(c)],
        }
        return Verdict(NOT_APPLICABLE, reason, delta=delta)
    data = orthant_data(d_gamma, P.d)
    P_in = compute_p_in(P, d_gamma)
    ends = segment_endpoint_check(P_in, d_gamma)
    base = dict(orthant=data, p_in=P_in)

    def certify(seed1, seed2, how):
        n_cert = certified_order(P, d_gamma, order)
        if n_cert < 1:
            raise TruncationTooSmall(
                f"P known to order {P.trunc} cannot certify anything above d*gamma = {point_json(d_gamma)}"
            )
        cert = certify_split(P, seed1, seed2, data.q, data.beta, n_cert, check, lift_states)
        return cert, {"route": how, "split": [seed1.to_string("Z"), seed2.to_string("Z")]}

    if not ends.endpoint:
        P_bar = P_in.at_ones()
        zs = UniPoly.monomial(P.ctx, ends.s)
        H = P_bar.exact_div(zs)
        cert, reason = certify(zs, H, "missing_endpoint")
        reason["s"] = ends.s
        return Verdict(REDUCIBLE, reason, cert, **base)

    Q = extract_q_poly(P_in, data)
    try:
        split = coprime_split(Q, degree_bound, seed)
    except DegreeBoundExceeded as exc:
        reason = {"Q": Q.to_string("T"), "degree_bound": exc.bound, "degree": exc.degree}
        return Verdict(UNDECIDED, reason, q_poly=Q, **base)
    if split is None:
        phi, r = power_base(Q, degree_bound, seed)
        reason = {"Q": Q.to_string("T"), "phi": phi.to_string("T"), "r": r}
        return Verdict(INCONCLUSIVE, reason, q_poly=Q, **base)
    Q1, Q2 = split
    e = data.u[-1]
    cert, reason = certify(Q1.inflate(e), Q2.inflate(e), "segment_split")
    reason["Q_split"] = [Q1.to_string("T"), Q2.to_string("T")]
    return Verdict(REDUCIBLE, reason, cert, q_poly=Q, **base)


__all__ = [
    "EndpointCheck",
    "OrthantData",
    "Verdict",
    "apply_criterion",
    "compute_p_in",
    "extract_q_poly",
    "gamma_decompose",
    "orthant_data",
    "reconstruct_p_in",
    "segment_endpoint_check",
]
