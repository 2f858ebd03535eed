import pytest

from prymweil.cover import (
    CoverDatum,
    EnumerationLimitError,
    group_lattice_check,
    grid_data,
    h1_cover,
    prym_ledger,
    schoen_primitive,
    total_genus,
)
from prymweil.groups import AbGroup, GChar, abelian_groups_up_to

T = AbGroup.trivial()


def genus_by_euler_characteristic(G, g):
    # chi(C) = |G| chi(C') for an unramified cover, chi = 2 - 2g
    chi_C = G.order * (2 - 2 * g)
    return (2 - chi_C) // 2


def test_total_genus_examples():
    assert total_genus(CoverDatum(AbGroup((3,)), 2)) == 4
    assert total_genus(CoverDatum(T, 2)) == 2
    assert total_genus(CoverDatum(AbGroup((2, 2)), 3)) == 9


@pytest.mark.parametrize("G", abelian_groups_up_to(16), ids=str)
@pytest.mark.parametrize("g", range(2, 7))
def test_total_genus_oracle_and_dimension_identity(G, g):
    D = CoverDatum(G, g)
    assert total_genus(D) == genus_by_euler_characteristic(G, g)
    assert 2 * total_genus(D) == 2 * g + (G.order - 1) * D.h
    assert h1_cover(D).total_dim() == 2 * total_genus(D)


def test_base_genus_guard():
    with pytest.raises(ValueError, match="g\\(C'\\) >= 2"):
        CoverDatum(AbGroup((3,)), 1)


def test_h1_z3():
    G = AbGroup((3,))
    H = h1_cover(CoverDatum(G, 2))
    assert H.multiplicity(GChar(G, (0,)), 1, 0) == 2 and H.multiplicity(GChar(G, (0,)), 0, 1) == 2
    for a in (1, 2):
        assert H.multiplicity(GChar(G, (a,)), 1, 0) == 1 == H.multiplicity(GChar(G, (a,)), 0, 1)
    assert H.total_dim() == 8


def test_h1_trivial_group():
    H = h1_cover(CoverDatum(T, 3))
    assert H.total_dim() == 6


def test_prym_examples():
    assert prym_ledger(CoverDatum(AbGroup((3,)), 2)).prym_dim == 2
    L = prym_ledger(CoverDatum(AbGroup((4,)), 3))
    dims = {O.field_conductor: d for O, d in L.per_irrep_dims}
    assert dims == {1: 3, 2: 2, 4: 4} and L.prym_dim == 6
    assert prym_ledger(CoverDatum(T, 2)).prym_dim == 0


def test_schoen():
    for m, g, b in [(3, 3, 4), (4, 3, 4), (2, 2, 1)]:
        S = schoen_primitive(CoverDatum(AbGroup((m,)), g))
        assert S.b_prim_dim == b
    S = schoen_primitive(CoverDatum(AbGroup((2,)), 2))
    assert S.u_prim_dim == 1
    S = schoen_primitive(CoverDatum(AbGroup((5,)), 3))
    assert S.tangent_multiplicities == ((1, 2), (2, 2), (3, 2), (4, 2))
    with pytest.raises(ValueError):
        schoen_primitive(CoverDatum(AbGroup((2, 2)), 2))


def test_lattice_examples():
    z3 = group_lattice_check(CoverDatum(AbGroup((3,)), 2))
    assert z3.order_N == 3 and z3.index == 3 and z3.n_is_subgroup
    z2 = group_lattice_check(CoverDatum(AbGroup((2,)), 2))
    assert z2.order_N == 2 and z2.index == 2
    v = group_lattice_check(CoverDatum(AbGroup((2, 2)), 2))
    assert v.index == 4


@pytest.mark.parametrize("G", [g for g in abelian_groups_up_to(8) if g.order > 1], ids=str)
def test_antidiagonal_subgroup_lies_in_N(G):
    # (g, -g, 0, ...) sums to zero, so it maps to the identity of G^h / N
    res = group_lattice_check(CoverDatum(G, 2), embedding="antidiagonal")
    assert res.index_ok and res.n_is_subgroup
    assert not res.g0_isomorphic
    assert "lie in N" in res.witness


@pytest.mark.parametrize("G", abelian_groups_up_to(8), ids=str)
def test_coordinate_subgroup_is_a_section(G):
    assert group_lattice_check(CoverDatum(G, 2), embedding="coordinate").ok


def test_enumeration_cap():
    with pytest.raises(EnumerationLimitError):
        group_lattice_check(CoverDatum(AbGroup((5,)), 6), cap=10**6)


def test_grid_data():
    row = grid_data(CoverDatum(AbGroup((2, 2)), 3))
    assert row == {
        "order": 4,
        "invariant_factors": (2, 2),
        "base_genus": 3,
        "total_genus": 9,
        "prym_dim": 6,
        "dim_U": 3,
    }
