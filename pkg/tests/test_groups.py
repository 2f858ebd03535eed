from fractions import Fraction as F
from math import gcd

import pytest
from hypothesis import given, strategies as st

from prymweil.cyclo import CycloNum, euler_phi
from prymweil.groups import (
    AbGroup,
    abelian_groups_of_order,
    abelian_groups_up_to,
    characters,
    ga_mul,
    ga_one,
    galois_orbits,
    normalize_group,
    split_group_algebra,
)


def test_normalize():
    assert normalize_group([2, 3]).invariant_factors == (6,)
    assert normalize_group([4]).invariant_factors == (4,)
    assert normalize_group([2, 2, 4]).invariant_factors == (2, 2, 4)
    assert normalize_group([4, 6]).invariant_factors == (2, 12)
    assert normalize_group([]).order == 1
    with pytest.raises(ValueError):
        normalize_group([1, 3])


def test_group_counts():
    # number of abelian groups of order n is a product of partition numbers
    assert [len(abelian_groups_of_order(n)) for n in (1, 4, 8, 12, 16)] == [1, 2, 3, 2, 5]
    assert len(abelian_groups_up_to(16)) == 25


def test_character_values():
    G = AbGroup((2,))
    vals = [{chi(x) for x in G.elements} for chi in characters(G)]
    assert vals == [{CycloNum.rational(1)}, {CycloNum.rational(1), CycloNum.rational(-1)}]
    V = AbGroup((2, 2))
    assert len(characters(V)) == 4
    assert all(chi(x) in (1, -1) for chi in characters(V) for x in V.elements)
    assert [chi.order for chi in characters(AbGroup((4,)))] == [1, 4, 2, 4]


def test_orbits_z4():
    orbits = galois_orbits(AbGroup((4,)))
    assert [O.field_conductor for O in orbits] == [1, 2, 4]
    assert [len(O.orbit) for O in orbits] == [1, 1, 2]


def test_orbits_fields():
    assert [O.field_conductor for O in galois_orbits(AbGroup((2, 2)))] == [1, 2, 2, 2]
    assert [O.field_conductor for O in galois_orbits(AbGroup((6,)))] == [1, 2, 3, 6]
    assert [O.degree for O in galois_orbits(AbGroup((8,)))] == [1, 1, 2, 4]
    assert [O.field_conductor for O in split_group_algebra(AbGroup((3,))).factors] == [1, 3]


def test_idempotent_examples():
    z2 = split_group_algebra(AbGroup((2,)))
    assert z2.trivial_factor.idempotent == (F(1, 2), F(1, 2))
    assert z2.nontrivial_factors[0].idempotent == (F(1, 2), F(-1, 2))
    z4 = split_group_algebra(AbGroup((4,)))
    assert z4.factors[2].idempotent == (F(1, 2), 0, F(-1, 2), 0)
    for G in abelian_groups_up_to(12):
        triv = split_group_algebra(G).trivial_factor.idempotent
        assert triv == tuple(F(1, G.order) for _ in G.elements)


def explicit_characters(G):
    """Characters as homomorphisms: values fixed on generators by every choice of roots of unity."""
    import itertools

    choices = [range(d) for d in G.invariant_factors]
    out = []
    for a in itertools.product(*choices):
        vals = {}
        for x in G.elements:
            v = CycloNum.rational(1, G.exponent)
            for ai, xi, d in zip(a, x, G.invariant_factors):
                v = v * CycloNum.zeta(d, ai * xi).lift(G.exponent) if d > 1 else v
            vals[x] = v
        out.append(vals)
    return out


@pytest.mark.parametrize("G", abelian_groups_up_to(12), ids=str)
def test_characters_match_product_oracle(G):
    ours = [tuple(chi(x) for x in G.elements) for chi in characters(G)]
    oracle = [tuple(v[x] for x in G.elements) for v in explicit_characters(G)]
    assert sorted(map(str, ours)) == sorted(map(str, oracle))


@pytest.mark.parametrize("G", abelian_groups_up_to(16), ids=str)
def test_split_integrity(G):
    S = split_group_algebra(G)
    assert sum(euler_phi(O.field_conductor) for O in S.factors) == G.order
    total = [F(0)] * G.order
    for O in S.factors:
        assert all(isinstance(c, F) for c in O.idempotent)
        total = [a + b for a, b in zip(total, O.idempotent)]
        assert ga_mul(G, O.idempotent, O.idempotent) == O.idempotent
        assert len({chi.order for chi in O.orbit}) == 1
        f = O.field_conductor
        assert sorted(chi.coords for chi in O.orbit) == sorted(
            {O.representative.power(k).coords for k in range(1, f + 1) if gcd(k, f) == 1}
        )
    assert tuple(total) == ga_one(G)


@pytest.mark.parametrize("G", abelian_groups_up_to(16), ids=str)
def test_fourier_sends_idempotents_to_unit_vectors(G):
    S = split_group_algebra(G)
    for i, O in enumerate(S.factors):
        img = S.fourier(O.idempotent)
        assert [x == int(i == j) for j, x in enumerate(img)] == [True] * len(img)


@given(st.sampled_from(abelian_groups_up_to(16)), st.data())
def test_fourier_is_multiplicative(G, data):
    S = split_group_algebra(G)
    q = st.fractions(-2, 2, max_denominator=2)
    a = [data.draw(q) for _ in G.elements]
    b = [data.draw(q) for _ in G.elements]
    A = S.etale_algebra()
    assert S.fourier(ga_mul(G, a, b)) == A.mul(S.fourier(a), S.fourier(b))


@pytest.mark.parametrize("G", abelian_groups_up_to(16), ids=str)
def test_character_orthogonality(G):
    chars = characters(G)
    for chi in chars:
        for psi in chars:
            s = CycloNum.rational(0, G.exponent)
            for x in G.elements:
                s = s + chi(x) * psi(x).conj()
            assert s == (G.order if chi == psi else 0)
