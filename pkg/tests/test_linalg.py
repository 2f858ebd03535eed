from fractions import Fraction as F

from hypothesis import given, strategies as st

from prymweil import linalg
from prymweil.cyclo import CycloNum


def test_rank_and_nullspace():
    rows = [[F(1), F(2), F(3)], [F(2), F(4), F(6)]]
    assert linalg.rank(rows) == 1
    ns = linalg.nullspace(rows, 3)
    assert len(ns) == 2
    for v in ns:
        assert sum(a * b for a, b in zip(rows[0], v)) == 0


def test_solve_inconsistent():
    assert linalg.solve([[F(1)], [F(1)]], [F(1), F(2)]) is None
    assert linalg.solve([[F(2), F(0)], [F(0), F(4)]], [F(1), F(1)]) == [F(1, 2), F(1, 4)]


def test_rank_over_cyclotomic_field():
    z = CycloNum.zeta(3)
    one = CycloNum.rational(1, 3)
    # rows differ by the scalar z, so the rank is one
    assert linalg.rank([[one, z], [z, z * z]]) == 1
    assert linalg.rank([[one, z], [z, one]]) == 2


mats = st.lists(st.lists(st.fractions(-3, 3, max_denominator=3), min_size=4, max_size=4), min_size=1, max_size=4)


@given(mats)
def test_rank_nullity(rows):
    ns = linalg.nullspace(rows, 4)
    assert linalg.rank(rows) + len(ns) == 4
    for v in ns:
        for r in rows:
            assert sum(a * b for a, b in zip(r, v)) == 0


@given(mats)
def test_same_span_with_rref(rows):
    R, piv = linalg.rref(rows)
    assert linalg.same_span(rows, R[: len(piv)])
