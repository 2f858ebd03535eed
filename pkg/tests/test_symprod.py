import itertools
from math import comb

import pytest
from hypothesis import given, strategies as st

from prymweil.cover import CoverDatum
from prymweil.groups import AbGroup, GChar, abelian_groups_up_to, characters
from prymweil.cyclo import CycloNum
from prymweil.symprod import (
    PoincarePoly,
    aj_pushforward,
    circle_ls_cohomology,
    cohomology_of_W,
    leray_e2,
    leray_sym,
    macdonald_middle,
    poincare_jacobian,
    poincare_sym,
    proj_bundle_cohomology,
    torus_ls_cohomology,
    torus_ls_oracle,
)


def sym_by_enumeration(d, g):
    """Brute-force expansion of the t^d coefficient.

    A monomial of degree d picks j of the 2g odd generators (each at most
    once, degree 1), a copies of the degree-0 generator and b copies of
    the degree-2 generator with j + a + b = d.
    """
    out = [0] * (2 * d + 1)
    for j in range(min(d, 2 * g) + 1):
        for b in range(d - j + 1):
            out[j + 2 * b] += comb(2 * g, j)
    return PoincarePoly(out)


def test_jacobian():
    assert poincare_jacobian(1) == (1, 2, 1)
    assert poincare_jacobian(3) == tuple(comb(6, k) for k in range(7))
    assert poincare_jacobian(0) == (1,)


def test_sym_examples():
    assert poincare_sym(2, 2) == (1, 4, 7, 4, 1)
    for g in range(5):
        assert poincare_sym(1, g) == (1, 2 * g, 1)
        assert poincare_sym(0, g) == (1,)


@pytest.mark.parametrize("g", range(0, 6))
@pytest.mark.parametrize("d", range(0, 12))
def test_sym_matches_enumeration(d, g):
    assert poincare_sym(d, g) == sym_by_enumeration(d, g)


def test_macdonald_middle():
    assert macdonald_middle(4, 2).total == 29
    assert [s.dimension for s in macdonald_middle(4, 2).summands] == [28, 1]
    assert [s.dimension for s in macdonald_middle(3).summands] == [15, 15, 1]
    assert macdonald_middle(2).total == 7
    for g in range(2, 7):
        assert macdonald_middle(g).total == poincare_sym(2 * g - 2, g).betti(2 * g - 2)


def test_proj_bundle_examples():
    assert proj_bundle_cohomology(3, 1) == PoincarePoly([1, 0, 1, 0, 1]) * PoincarePoly([1, 2, 1])
    assert proj_bundle_cohomology(3, 2) == PoincarePoly([1, 0, 1]) * PoincarePoly([1, 4, 6, 4, 1])
    with pytest.raises(ValueError):
        proj_bundle_cohomology(2, 2)


def test_pushforward_layers():
    m3 = aj_pushforward(3)
    assert [(L.degree, L.kind) for L in m3.layers] == [(0, "free"), (2, "free"), (4, "skyscraper")]
    m2 = aj_pushforward(2)
    assert [(L.degree, L.kind) for L in m2.layers] == [(0, "free"), (2, "skyscraper")]
    for g in range(2, 7):
        assert all(L.degree % 2 == 0 for L in aj_pushforward(g).layers)


def test_torus_vanishing():
    G = AbGroup((3,))
    assert torus_ls_cohomology(GChar(G, (1,)), 3) == PoincarePoly()
    assert torus_ls_cohomology(GChar(G, (0,)), 2) == (1, 4, 6, 4, 1)
    assert circle_ls_cohomology(CycloNum.zeta(3)) == PoincarePoly()
    assert circle_ls_cohomology(CycloNum.rational(1)) == (1, 1)


@pytest.mark.parametrize("G", abelian_groups_up_to(12), ids=str)
def test_torus_oracle(G):
    for g in range(2, 6):
        for chi in characters(G):
            assert torus_ls_cohomology(chi, g) == torus_ls_oracle(chi, g)


def test_leray_equals_macdonald():
    for g in range(2, 7):
        assert poincare_sym(2 * g - 2, g) == leray_sym(g)


def test_e2_nt_page():
    G = AbGroup((2, 2))
    assert leray_e2(G, 3, "nt").nonzero() == {(0, 4): 3}
    with pytest.raises(ValueError):
        leray_e2(G, 3, "other")


def test_w_examples():
    Wc = cohomology_of_W(CoverDatum(AbGroup((3,)), 2))
    assert Wc.sym == (1, 4, 7, 4, 1) and Wc.poincare == (1, 4, 9, 4, 1)
    for G in abelian_groups_up_to(8):
        assert cohomology_of_W(CoverDatum(G, 3)).poincare.betti(4) == 31 + G.order - 1
    T = cohomology_of_W(CoverDatum(AbGroup.trivial(), 3))
    assert T.poincare == T.sym


@given(st.lists(st.integers(0, 5), max_size=6), st.lists(st.integers(0, 5), max_size=6))
def test_poincare_product_matches_convolution(a, b):
    P, Q = PoincarePoly(a), PoincarePoly(b)
    direct = [0] * (len(a) + len(b))
    for (i, x), (j, y) in itertools.product(enumerate(a), enumerate(b)):
        direct[i + j] += x * y
    assert P * Q == PoincarePoly(direct)
    assert P + Q == Q + P
