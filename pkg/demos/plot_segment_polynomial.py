"""
Why the test reads Q(T) and not P(1, Z)
=======================================

For P = Z^2 - x^3*y the initial form is P itself. Setting x = y = 1 gives
Z^2 - 1, which splits, yet P is irreducible: x^3*y is not a square. The
segment polynomial walks along the primitive direction u instead and sees a
single root.
"""

from psirr import apply_criterion, parse_zpoly
from psirr.criterion import reconstruct_p_in
from psirr.oracle import factor_d2

P = parse_zpoly("Z^2 - x^3*y")
v = apply_criterion(P)
o = v.orthant

print("P(1, Z) =", P.at_ones().to_string("Z"))
print("d*gamma =", [str(c) for c in o.d_gamma], " u =", o.u, " m =", o.m)
print("Q(T) =", v.q_poly.to_string("T"))
print("verdict:", v.kind, v.reason)

# x^(d gamma) * Q(y^u) gives back the initial form exactly.
print("rebuilt initial form:", reconstruct_p_in(v.q_poly, o, v.p_in))

# The degree-2 oracle agrees that no factorization exists.
print("oracle:", factor_d2(P, 8).obstruction)

###############################################################################
# Compare with a genuine square
# -----------------------------
# Z^2 - x^4*y^2 - x^5*y^2: Q(T) = T^2 - 1, two roots, reducible.

P = parse_zpoly("Z^2 - x^4*y^2 - x^5*y^2")
v = apply_criterion(P, order=6)
print(v.kind, "Q(T) =", v.q_poly.to_string("T"))
print("F1 =", v.certificate.F1)
