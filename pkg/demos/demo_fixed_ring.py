"""Generators and relations of a fixed ring, discovered and certified.

For each of three cyclic groups acting on the 3-cycle quiver, this script
finds a minimal set of fixed-path generators, discovers the rewriting
relations among them, checks every overlap ambiguity, and confirms that
counting irreducible words reproduces the Hilbert series from averaging.
"""

from preproj import (
    check_ambiguities,
    count_irreducible_words,
    discover_relations,
    generate_group,
    make_aut,
    minimal_generators,
    molien_scalar,
    verify_presentation,
)
from preproj.parsing import format_ratfun_factored


def show(G, title):
    gens = minimal_generators(G)
    pres = discover_relations(G, gens)
    print(title)
    print("  generators:")
    for label, path in pres.generators:
        print("    %s = %s (degree %d)" % (label, path, path.degree))
    print("  relations:")
    for lhs, rhs in pres.relations:
        print("    %s -> %s" % ("*".join(lhs), "*".join(rhs)))
    amb = check_ambiguities(pres)
    print("  ambiguities: %d resolvable, %d unresolvable"
          % (len(amb.resolvable), len(amb.unresolvable)))
    _, _, total = count_irreducible_words(pres)
    print("  irreducible-word count:", format_ratfun_factored(total))
    assert total == molien_scalar(G)
    print("  verification:", "ok" if verify_presentation(pres, G).ok else "FAILED")
    print()


show(generate_group([make_aut(3, [1, 1, 1], [-1, -1, -1])]),
     "half-turn group (order 2)")
show(generate_group([make_aut(3, ["1", "-1", "-1"],
                              ["zeta(3)", "-zeta(3)", "-zeta(3)"])]),
     "order-6 cyclic group")
show(generate_group([make_aut(3, ["zeta(3)", "1", "zeta(3)^2"],
                              ["1", "zeta(3)", "zeta(3)^2"])]),
     "order-3 cyclic group")
