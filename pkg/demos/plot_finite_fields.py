"""
The same polynomial over different fields
=========================================

Z^2 + x^2 + x^3 has segment polynomial T^2 + 1. Whether that splits depends
on the field, and so does the verdict.
"""

from psirr import GF, QQ, apply_criterion, factor_fp, parse_zpoly
from psirr.upoly import UniPoly

for ctx in [QQ, GF(3), GF(5), GF(13)]:
    P = parse_zpoly("Z^2 + x^2 + x^3", ctx)
    v = apply_criterion(P, order=6)
    line = f"{str(ctx):>5}: {v.kind:13} Q(T) = {v.q_poly.to_string('T')}"
    if v.certificate:
        line += f"   F1 = {v.certificate.F1}"
    print(line)

###############################################################################
# Factoring over F_p
# ------------------
# Distinct-degree then equal-degree splitting, with a fixed seed so the
# output is reproducible.

F = GF(13)
T = UniPoly.gen(F)
f = T**8 + 3 * T**5 + 7 * T + 1
for phi, m in factor_fp(f, seed=0):
    print(f"  ({phi.to_string('T')})^{m}")

# Over F_2 the split T^2 - 1 = (T + 1)^2 collapses, so there is nothing to lift.
v = apply_criterion(parse_zpoly("Z^2 - x^2 - x^3", GF(2)))
print("char 2:", v.kind, v.reason)
