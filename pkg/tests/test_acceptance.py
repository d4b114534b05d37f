"""Acceptance gate: the fixed set of end-to-end checks this package must pass.

Each test prints one [PASS]/[FAIL] line (run pytest with -s to see them all);
every equality below is exact — no tolerances anywhere.
"""

import random
from contextlib import contextmanager

import pytest

from preproj import (
    AutGroup,
    DiagonalAut,
    Poly,
    RatFun,
    check_ambiguities,
    diagnose_projectivity,
    discover_relations,
    count_irreducible_words,
    generate_group,
    make_aut,
    matrix_hilbert_A,
    minimal_generators,
    molien_matrix,
    molien_scalar,
    p_at_one_factorization,
    parse_ratfun,
    pole_order_at_one,
    series_expand,
    total_trace_closed,
    trace_oracle,
    vector_trace_closed_34,
    vector_trace_closed_35,
    verify_generators,
    verify_presentation,
)
from preproj.cyclotomic import root_of_unity
from preproj.trace import b_vector, eq2_quotient_traces


@contextmanager
def criterion(number, description):
    try:
        yield
    except BaseException:
        print("[FAIL] criterion %d: %s" % (number, description))
        raise
    print("[PASS] criterion %d: %s" % (number, description))


def halfturn():
    return make_aut(3, [1, 1, 1], [-1, -1, -1])


def order6():
    return make_aut(3, ["1", "-1", "-1"], ["zeta(3)", "-zeta(3)", "-zeta(3)"])


def order3():
    return make_aut(3, ["zeta(3)", "1", "zeta(3)^2"], ["1", "zeta(3)", "zeta(3)^2"])


def random_aut(rng, n, orders=(1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12)):
    m = rng.choice(orders)
    z = root_of_unity(m)
    c = [z ** rng.randrange(m) for _ in range(n)]
    ct = z ** rng.randrange(m)
    return make_aut(n, c, [ct / ci for ci in c])


def test_criterion_1_halfturn_trace_three_ways():
    with criterion(1, "half-turn trace equals 3/(1-t^2) by all three methods"):
        g = halfturn()
        expected = parse_ratfun("3/(1-t^2)")
        assert total_trace_closed(g)[2] == expected
        v34 = vector_trace_closed_34(g)
        v35 = vector_trace_closed_35(g)
        assert sum(v34, RatFun.constant(0)) == expected
        assert v34 == v35
        _, oracle_total = trace_oracle(g, 40)
        assert series_expand(expected, 40) == oracle_total


def test_criterion_2_order6_trace_tower():
    with criterion(2, "all six traces of the order-6 automorphism reproduce"):
        g = order6()
        root3i = "(zeta(3)-zeta(3)^2)"  # i*sqrt(3)
        expected = {
            1: "(6 + (-1-%s)*t + (-4+4*%s)*t^2 + 2*t^3 + (-3-3*%s)*t^4)"
               "/(2*(1-t^3)^2)" % (root3i, root3i, root3i),
            2: "(6 + (3-3*%s)*t)/(2*(1-t^3))" % root3i,
            3: "(3-5*t+3*t^2)/((1-t)*(1-t^3))",
            4: "(6 + (3+3*%s)*t)/(2*(1-t^3))" % root3i,
            5: "(6 + (-1+%s)*t + (-4-4*%s)*t^2 + 2*t^3 + (-3+3*%s)*t^4)"
               "/(2*(1-t^3)^2)" % (root3i, root3i, root3i),
            6: "3/(1-t)^2",
        }
        for power, text in expected.items():
            assert total_trace_closed(g ** power)[2] == parse_ratfun(text), power


def test_criterion_3_molien_scalar_fixtures():
    with criterion(3, "fixed-ring Hilbert series for the three worked groups"):
        fixtures = [
            (halfturn(), "3/((1-t)^2*(1+t))"),
            (order6(), "(3+t+t^2)/(1-t^3)^2"),
            (order3(), "(3+2*t+2*t^2+2*t^3)/(1-t^3)^2"),
        ]
        for g, text in fixtures:
            assert molien_scalar(generate_group([g])) == parse_ratfun(text)


def test_criterion_4_matrix_fixtures():
    with criterion(4, "matrix Hilbert series for the cycle and the order-6 group"):
        den = parse_ratfun("1/(1-t^3)^2")
        m = matrix_hilbert_A(3)
        off = parse_ratfun("t+t^2+t^3") * den
        diag = parse_ratfun("1+t^2+t^4") * den
        for i in range(3):
            for j in range(3):
                assert m[i, j] == (diag if i == j else off)
        rec = molien_matrix(generate_group([order6()]))
        assert rec.status == "ok"
        zero = RatFun.constant(0)
        expected = [
            [den, parse_ratfun("t") * den, zero],
            [parse_ratfun("t^2") * den, den, zero],
            [zero, zero, den],
        ]
        for i in range(3):
            for j in range(3):
                assert rec.matrix[i, j] == expected[i][j]


def test_criterion_5_projectivity_diagnostics():
    with criterion(5, "decomposition matrices and freeness verdicts"):
        rep6 = diagnose_projectivity(generate_group([order6()]))
        assert rep6.verdict == "ProjectiveNotFreeConsistent"
        expected_P = [
            ["1+t^2", "t^2", "t+t^2+t^3"],
            ["t+t^3", "1", "t+t^2+t^3"],
            ["t+t^2", "t", "1+t^2+t^4"],
        ]
        for i in range(3):
            for j in range(3):
                assert rep6.P[i, j] == parse_ratfun(expected_P[i][j])
        rep2 = diagnose_projectivity(generate_group([halfturn()]))
        assert rep2.verdict == "FreeConsistent"
        assert rep2.freeness_cofactor == Poly([1, 1])
        rep3 = diagnose_projectivity(generate_group([order3()]))
        assert rep3.verdict == "NotProjective"


def test_criterion_6_presentations():
    with criterion(6, "presentation word counts, verification and the one overlap"):
        G2 = generate_group([halfturn()])
        pres2 = discover_relations(G2, minimal_generators(G2, 4))
        _, _, total2 = count_irreducible_words(pres2)
        assert total2 == parse_ratfun("3/((1-t)^2*(1+t))")
        assert verify_presentation(pres2, G2).ok

        G6 = generate_group([order6()])
        pres6 = discover_relations(G6, minimal_generators(G6, 4))
        _, _, total6 = count_irreducible_words(pres6)
        assert total6 == parse_ratfun("(3+t+t^2)/(1-t^3)^2")
        assert verify_presentation(pres6, G6).ok

        G3 = generate_group([order3()])
        pres3 = discover_relations(G3, minimal_generators(G3, 4))
        report = check_ambiguities(pres3)
        # the single overlap word reduces to the same normal form both ways
        assert len(report.resolvable) == 1 and not report.unresolvable
        overlap, _ = report.resolvable[0]
        by_label = dict(pres3.generators)
        degree = sum(by_label[l].degree for l in overlap)
        assert degree == 6 and len(overlap) == 3


def test_criterion_7a_three_methods_agree():
    with criterion(7, "(a) 100 random automorphisms: all three methods agree"):
        rng = random.Random(20260823)
        for trial in range(100):
            n = rng.randrange(3, 9)
            g = random_aut(rng, n)
            v34 = vector_trace_closed_34(g)
            assert v34 == vector_trace_closed_35(g)
            oracle_vec, _ = trace_oracle(g, 40)
            for j in range(n):
                assert series_expand(v34[j], 40) == oracle_vec[j]


def test_criterion_7b_vector_sums_to_total():
    with criterion(7, "(b) vector entries sum to the total trace"):
        rng = random.Random(11)
        for trial in range(20):
            g = random_aut(rng, rng.randrange(3, 7))
            total = total_trace_closed(g)[2]
            assert sum(vector_trace_closed_34(g), RatFun.constant(0)) == total


def test_criterion_7c_pole_order_bound():
    with criterion(7, "(c) pole order at 1 is at most 2, exactly 2 for identity"):
        rng = random.Random(12)
        for n in range(3, 7):
            assert pole_order_at_one(
                total_trace_closed(DiagonalAut.identity(n))[2]
            ) == 2
        for trial in range(20):
            g = random_aut(rng, rng.randrange(3, 7))
            assert pole_order_at_one(total_trace_closed(g)[2]) <= 2


def test_criterion_7d_quotient_trace_identity():
    with criterion(7, "(d) quotient-trace identity holds entrywise"):
        rng = random.Random(13)
        for trial in range(20):
            g = random_aut(rng, rng.randrange(3, 7))
            assert eq2_quotient_traces(g) == b_vector(g)


def test_criterion_7e_molien_nonnegative_integer_coefficients():
    with criterion(7, "(e) Molien coefficients are nonnegative integers"):
        rng = random.Random(14)
        for trial in range(20):
            n = rng.randrange(3, 6)
            g = random_aut(rng, n, orders=(2, 3, 4, 6, 8, 12))
            G = generate_group([g])
            for coeff in series_expand(molien_scalar(G), 50):
                q = coeff.as_rational()
                assert q.denominator == 1 and q >= 0


def test_criterion_7f_numerator_factorization_at_one():
    with criterion(7, "(f) numerator factorization at t=1 for unit products"):
        rng = random.Random(15)
        checked = 0
        while checked < 50:
            m = rng.choice([1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12])
            z = root_of_unity(m)
            c1, c2 = (z ** rng.randrange(m) for _ in range(2))
            c3 = (c1 * c2) ** -1  # force c1*c2*c3 = 1
            ct = z ** rng.randrange(m)
            g = make_aut(3, [c1, c2, c3], [ct / c1, ct / c2, ct / c3])
            assert p_at_one_factorization(g).passed
            checked += 1


def test_criterion_7g_generator_lower_bound():
    with criterion(7, "(g) certified generator sets have at least 3n members"):
        rng = random.Random(16)
        checked = 0
        while checked < 8:
            n = rng.randrange(3, 5)
            g = random_aut(rng, n, orders=(2, 3, 4, 6))
            G = generate_group([g])
            gens = minimal_generators(G)
            complete, _ = verify_generators(G, gens, 2 * n * G.exponent())
            if not complete:
                continue
            # counting the n idempotents alongside the path generators
            assert len(gens) + n >= 3 * n
            checked += 1
