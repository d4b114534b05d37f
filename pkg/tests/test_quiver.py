import pytest

from preproj.cyclotomic import CycNum, root_of_unity
from preproj.quiver import (
    AutomorphismError,
    DiagonalAut,
    GroupBoundError,
    SimplePath,
    aut_order,
    generate_group,
    graded_basis,
    make_aut,
    make_cycle_quiver,
    path_eigenvalue,
)


def test_quiver_needs_three_vertices():
    assert make_cycle_quiver(3).n == 3
    assert make_cycle_quiver(5).n == 5
    with pytest.raises(ValueError):
        make_cycle_quiver(2)


def test_simple_path_endpoints():
    # forward arrows advance the vertex, reverse arrows go back, both mod n
    assert SimplePath(3, 1, 1, 0).end == 2
    assert SimplePath(3, 1, 0, 1).end == 3
    assert SimplePath(3, 1, 0, 2).end == 2
    assert SimplePath(3, 2, 2, 1).end == 3
    assert SimplePath(5, 4, 3, 0).end == 2
    assert SimplePath(3, 1, 3, 3).end == 1


def test_simple_path_compose():
    p = SimplePath(3, 1, 1, 0)
    q = SimplePath(3, 2, 0, 2)
    assert p.compose(q) == SimplePath(3, 1, 1, 2)
    assert q.compose(p) is None  # endpoints do not match


def test_graded_basis_counts():
    quiver = make_cycle_quiver(3)
    for s in range(12):
        assert len(graded_basis(quiver, 1, "any", s)) == s + 1
        total = sum(len(graded_basis(quiver, 1, j, s)) for j in (1, 2, 3))
        assert total == s + 1
    assert graded_basis(quiver, 1, 1, 2) == [SimplePath(3, 1, 1, 1)]
    assert graded_basis(quiver, 2, 2, 0) == [SimplePath(3, 2, 0, 0)]


def test_make_aut_validation():
    quiver = make_cycle_quiver(3)
    g = make_aut(quiver, ["1", "-1", "-1"], ["zeta(3)", "-zeta(3)", "-zeta(3)"])
    assert g.c[0] * g.t[0] == root_of_unity(3)
    with pytest.raises(AutomorphismError) as err:
        make_aut(quiver, [1, 1, 1], [1, 1, -1])
    assert "c_3*t_3" in str(err.value)
    with pytest.raises(AutomorphismError):
        make_aut(quiver, [1, 0, 1], [1, 1, 1])
    with pytest.raises(AutomorphismError):
        make_aut(quiver, [1, 1], [1, 1])


def test_aut_order(g_order6, g_order3):
    assert aut_order(DiagonalAut.identity(3)) == 1
    assert aut_order(g_order6) == 6
    assert aut_order(g_order3) == 3
    golden = make_aut(3, [1, 1, 1], [CycNum.from_rational(2)] * 3)
    with pytest.raises(AutomorphismError):
        aut_order(golden)


def test_compose_and_powers(g_order6):
    assert (g_order6 ** 6).is_identity()
    assert not (g_order6 ** 3).is_identity()
    assert g_order6 ** -1 == g_order6 ** 5
    assert g_order6.compose(g_order6) == g_order6 ** 2


def test_generate_group_sizes(g_order6, g_order3):
    assert len(generate_group([DiagonalAut.identity(3)])) == 1
    assert len(generate_group([g_order6])) == 6
    assert len(generate_group([g_order3, g_order3 ** 2])) == 3
    G = generate_group([g_order6])
    assert G.elements[0].is_identity()


def test_generate_group_is_closed_and_abelian(g_order6):
    G = generate_group([g_order6])
    elems = list(G)
    for a in elems:
        for b in elems:
            ab = a.compose(b)
            assert ab == b.compose(a)
            assert any(ab == c for c in elems)


def test_group_cap(g_order6):
    with pytest.raises(GroupBoundError):
        generate_group([g_order6], cap=3)


def test_path_eigenvalues(g_halfturn):
    # x = both reverse arrows into vertex 1's cycle: t3 * t2 = 1
    assert path_eigenvalue(g_halfturn, SimplePath(3, 1, 0, 2)).is_one()
    assert path_eigenvalue(g_halfturn, SimplePath(3, 1, 0, 0)).is_one()
    assert path_eigenvalue(g_halfturn, SimplePath(3, 1, 1, 0)).is_one()
    assert path_eigenvalue(g_halfturn, SimplePath(3, 1, 0, 1)) == CycNum.from_rational(-1)


def test_eigenvalue_multiplicative(g_order6):
    p = SimplePath(3, 1, 2, 1)
    q = SimplePath(3, p.end, 1, 2)
    combined = p.compose(q)
    assert path_eigenvalue(g_order6, combined) == \
        path_eigenvalue(g_order6, p) * path_eigenvalue(g_order6, q)
