"""Is the big algebra projective (or free) over its fixed ring?

Dividing the matrix Hilbert series of the full algebra by that of the fixed
ring gives a candidate decomposition matrix P.  If every entry of P is a
polynomial with nonnegative integer coefficients, the algebra is consistent
with being projective over the fixed ring; if moreover P is a polynomial
multiple of a single column pattern, it is consistent with being free.
"""

from preproj import Poly, diagnose_projectivity, generate_group, make_aut
from preproj.parsing import format_poly, format_ratfun


def show(G, title):
    report = diagnose_projectivity(G)
    print(title)
    print("  verdict:", report.verdict)
    if isinstance(report.freeness_cofactor, Poly):
        print("  freeness cofactor:", format_poly(report.freeness_cofactor))
    for i in range(G.n):
        print("    [%s]" % ", ".join(
            format_ratfun(report.P[i, j]) for j in range(G.n)
        ))
    for note in report.notes:
        print("  note:", note)
    print()


show(generate_group([make_aut(3, [1, 1, 1], [-1, -1, -1])]),
     "half-turn group: free over the fixed ring")
show(generate_group([make_aut(3, ["1", "-1", "-1"],
                              ["zeta(3)", "-zeta(3)", "-zeta(3)"])]),
     "order-6 group: projective but not free")
show(generate_group([make_aut(3, ["zeta(3)", "1", "zeta(3)^2"],
                              ["1", "zeta(3)", "zeta(3)^2"])]),
     "order-3 group: not projective")
