import pytest

from preproj import generate_group, make_aut


@pytest.fixture(scope="session")
def g_halfturn():
    """Order-2 automorphism negating every reverse arrow on the 3-cycle."""
    return make_aut(3, [1, 1, 1], [-1, -1, -1])


@pytest.fixture(scope="session")
def g_order6():
    """Order-6 automorphism with c1*t1 = zeta(3) on the 3-cycle."""
    return make_aut(3, ["1", "-1", "-1"], ["zeta(3)", "-zeta(3)", "-zeta(3)"])


@pytest.fixture(scope="session")
def g_order3():
    """Order-3 automorphism with zeta(3)-power scalars on the 3-cycle."""
    return make_aut(3, ["zeta(3)", "1", "zeta(3)^2"], ["1", "zeta(3)", "zeta(3)^2"])


@pytest.fixture(scope="session")
def group_halfturn(g_halfturn):
    return generate_group([g_halfturn])


@pytest.fixture(scope="session")
def group_order6(g_order6):
    return generate_group([g_order6])


@pytest.fixture(scope="session")
def group_order3(g_order3):
    return generate_group([g_order3])
