"""
A certified factorization
=========================

Z^2 - x^2(1 + x) factors as (Z - x*sqrt(1 + x))(Z + x*sqrt(1 + x)). The test
finds the split of its segment polynomial T^2 - 1, lifts it, and checks the
product against P term by term.
"""

from psirr import apply_criterion, parse_zpoly

P = parse_zpoly("Z^2 - x^2*(1 + x)")
v = apply_criterion(P, order=10, check=True)

print("verdict:", v.kind)
print("d*gamma =", [str(c) for c in v.orthant.d_gamma], " q =", v.orthant.q, " beta =", v.orthant.beta)
print("Q(T) =", v.q_poly.to_string("T"), "splits as", v.reason["Q_split"])

cert = v.certificate
print("F1 =", cert.F1)
print("F2 =", cert.F2)
print("checks:", cert.verify(P).checks)

###############################################################################
# The binomial series, read off the certificate
# ---------------------------------------------
# -F1 at Z = 0 is x*sqrt(1 + x) to order 10.

root = -cert.F1.coeffs[0]
for exps, c in root.sorted_terms():
    print(f"  x^{exps[0]}: {c}")

###############################################################################
# When the segment loses its endpoint
# -----------------------------------
# Z^3 + x*Z^2 + x^5 has d*gamma = 3 but no x^3 term, so Z^2 divides the
# initial form and the split Z^2 * (Z + 1) is lifted instead.

P = parse_zpoly("Z^3 + x*Z^2 + x^5")
v = apply_criterion(P, order=8)
print(v.kind, v.reason)
print("F1 =", v.certificate.F1)
print("F2 =", v.certificate.F2)
