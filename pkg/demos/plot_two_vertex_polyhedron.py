"""
When the test does not apply
============================

P = Z^2 - (x^3 - y^5)^2 + y^11 has an associated polyhedron with two
vertices, so the reducibility test has nothing to say. The initial form
changes with the weight here. Irreducibility is settled another way: P has
degree 2, so it splits exactly when its discriminant is a square.
"""

from psirr import apply_criterion, delta_generators, delta_vertices, initial_form, omega_extension, parse_zpoly
from psirr.oracle import series_sqrt

P = parse_zpoly("Z^2 - (x^3 - y^5)^2 + y^11")
print("P =", P)

# One generator d*alpha/(d - j) per term below Z^d.
delta = delta_vertices(delta_generators(P))
for g in delta.generators:
    print("generator", [str(v) for v in g])

# (3,5) sits on the segment and (0,11) above it: two vertices remain.
for v in delta.vertices:
    print("vertex", [str(c) for c in v], "isolated by weight", [str(c) for c in delta.witnesses[v]])

###############################################################################
# Three weight regimes
# --------------------
# Which terms survive depends on how 6*w1 compares with 10*w2.

for w in [(1, 1), (2, 1), (5, 3)]:
    ext = omega_extension(P, w)
    print(f"w = {w}: w3 = {ext.last}, initial form {initial_form(P, ext)}")

verdict = apply_criterion(P)
print(verdict.kind, verdict.reason)

###############################################################################
# Irreducibility by hand
# ----------------------
# The discriminant is 4((x^3 - y^5)^2 - y^11). Its square root, if it
# existed, would start with x^3 - y^5; the y^11 term breaks that at degree 11.

disc = -parse_zpoly("Z - ((x^3 - y^5)^2 - y^11)").coeffs[0]
res = series_sqrt(disc, 16)
print("square root exists:", res.ok)
print("obstruction:", res.obstruction)
