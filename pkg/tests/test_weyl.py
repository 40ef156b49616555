from __future__ import annotations

import pytest

from nichols import catalog
from nichols.braided import BraidingMatrix
from nichols.errors import CapExceeded, IncompleteRootList, MijUnbounded
from nichols.weyl import (
    GroupoidObject,
    cartan_matrix,
    check_associated_order,
    check_convex,
    explore_groupoid,
    lambda_plus,
    m_ij,
    positive_roots,
    reflect,
)

EX1_ROOTS = {(0, 0, 1), (0, 1, 1), (0, 1, 0), (1, 2, 1), (1, 1, 1), (1, 1, 0), (1, 0, 0)}
EX2_ROOTS = {(0, 0, 1), (0, 1, 1), (0, 1, 0), (1, 0, 1), (1, 1, 1), (1, 1, 0), (1, 0, 0)}


def test_m_ij_examples():
    # q_ii = -1 gives m_ij = 1 unless q_ij q_ji = 1
    assert m_ij(catalog.EX1, 2, 1) == 1
    assert m_ij(catalog.EX1, 1, 2) == 1
    assert m_ij(catalog.EX1, 1, 3) == 0
    assert m_ij(catalog.A1XA1, 1, 2) == 0
    assert cartan_matrix(catalog.A2) == ((2, -1), (-1, 2))
    with pytest.raises(ValueError):
        m_ij(catalog.A2, 1, 1)
    with pytest.raises(IndexError):
        m_ij(catalog.A2, 1, 3)


def test_m_ij_unbounded():
    b = BraidingMatrix(5, ((0, 1), (0, 0)))  # q_11 = 1, q_12 q_21 != 1
    with pytest.raises(MijUnbounded):
        m_ij(b, 1, 2, bound=20)


def test_reflection_is_involutive():
    for b in catalog.TEST_SET.values():
        x = GroupoidObject.of(b)
        for i in range(1, b.rank + 1):
            assert reflect(reflect(x, i), i) == x


def test_example_root_systems():
    rs1 = positive_roots(GroupoidObject.of(catalog.EX1))
    assert set(rs1.positive_roots) == EX1_ROOTS
    assert len(rs1.longest_word) == 7
    rs2 = positive_roots(GroupoidObject.of(catalog.EX2))
    assert set(rs2.positive_roots) == EX2_ROOTS


def test_twist_equivalent_matrices_share_roots():
    a = positive_roots(GroupoidObject.of(catalog.EX2))
    b = positive_roots(GroupoidObject.of(catalog.EX2_SYMMETRIC))
    assert set(a.positive_roots) == set(b.positive_roots)


def test_rank_one_and_products():
    rs = positive_roots(GroupoidObject.of(catalog.RANK1_I))
    assert rs.positive_roots == [(1,)] and rs.heights == [4]
    rs = positive_roots(GroupoidObject.of(catalog.A1XA1))
    assert set(rs.positive_roots) == {(1, 0), (0, 1)}


def test_infinite_root_system_hits_cap():
    # affine A1: q_11 = q_22 = q, q_12 q_21 = q^-2
    b = BraidingMatrix(5, ((1, 3), (0, 1)))
    with pytest.raises(CapExceeded):
        positive_roots(GroupoidObject.of(b), cap=50)


def test_groupoid_object_cap():
    start = GroupoidObject.of(catalog.EX1)
    assert len(explore_groupoid(start).objects) > 2
    with pytest.raises(CapExceeded):
        explore_groupoid(start, cap=2)


@pytest.mark.parametrize("name", sorted(catalog.TEST_SET))
def test_greedy_order_is_convex_and_associated(name):
    rs = positive_roots(GroupoidObject.of(catalog.TEST_SET[name]))
    assert check_convex(rs.positive_roots, rs.positive_roots)
    ok, cert = check_associated_order(rs.positive_roots, rs.positive_roots)
    assert ok, cert


def test_nonconvex_order_is_rejected():
    # alpha_1 + alpha_2 placed before both summands
    roots = {(1, 0), (0, 1), (1, 1)}
    assert not check_convex([(1, 1), (1, 0), (0, 1)], roots)
    ok, cert = check_associated_order([(1, 1), (1, 0), (0, 1)], roots)
    assert not ok and cert[0] in "ab"
    with pytest.raises(IncompleteRootList):
        check_convex([(1, 0), (1, 0)])
    with pytest.raises(IncompleteRootList):
        check_convex([(1, 0)], roots)


def test_lambda_plus_of_longest_word():
    start = GroupoidObject.of(catalog.EX1)
    rs = positive_roots(start)
    assert lambda_plus(start, rs.longest_word) == set(rs.positive_roots)
    assert lambda_plus(start, [1, 1]) == set()
