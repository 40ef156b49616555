from __future__ import annotations

from itertools import product

import pytest

from nichols import catalog
from nichols.errors import UnboundedEnumeration
from nichols.pbw import (
    dimension,
    enumerate_monomials,
    hilbert_series,
    in_B,
    in_C,
    in_D,
    monomial_filter,
    monomial_sets_BiCj,
)
from nichols.weyl import check_convex
from nichols.words import is_lyndon, to_str

from conftest import pbw_of


def test_ex1_lyndon_words(ex1_pbw):
    assert [to_str(g.lyndon) for g in ex1_pbw.generators] == [
        "x1", "x1x2", "x1x2x3", "x1x2x3x2", "x2", "x2x3", "x3",
    ]
    assert ex1_pbw.heights == [3, 2, 2, 3, 2, 2, 3]
    assert dimension(ex1_pbw) == 432


def test_ex2_lyndon_words(ex2_pbw):
    words = {g.root: to_str(g.lyndon) for g in ex2_pbw.generators}
    assert words[(1, 1, 1)] == "x1x3x2"
    assert words[(1, 0, 1)] == "x1x3"
    assert dimension(ex2_pbw) == 432


@pytest.mark.parametrize("name,dim", [("a2", 27), ("a1xa1", 4), ("rank2_super", 12)])
def test_small_dimensions(name, dim):
    assert dimension(pbw_of(catalog.TEST_SET[name])) == dim


@pytest.mark.parametrize("name", sorted(catalog.TEST_SET))
def test_lyndon_order_is_convex(name):
    pbw = pbw_of(catalog.TEST_SET[name])
    assert check_convex(pbw.roots, pbw.roots)
    words = [g.lyndon for g in pbw.generators]
    assert words == sorted(words)
    assert all(is_lyndon(u) for u in words)
    for g in pbw.generators:
        assert pbw.braiding.degree(g.lyndon) == g.root


def test_bicj_example(ex2_pbw):
    names = [ex2_pbw.monomial_str(m) for m in monomial_sets_BiCj(ex2_pbw, 1, 6, (1, 1, 1))]
    assert sorted(names) == sorted(["x_{a2+a3} x1", "x_{a1+a2+a3}", "x2 x_{a1+a3}"])


def brute_monomials(pbw, target):
    ranges = [range(h) for h in pbw.heights]
    return sorted(
        (m for m in product(*ranges) if pbw.monomial_degree(m) == tuple(target)), reverse=True
    )


@pytest.mark.parametrize("target", [(1, 1, 1), (2, 1, 0), (2, 2, 2), (0, 3, 1)])
def test_enumeration_matches_brute_force(ex1_pbw, target):
    assert enumerate_monomials(ex1_pbw, target) == brute_monomials(ex1_pbw, target)


def test_hilbert_series_totals():
    for b in catalog.TEST_SET.values():
        pbw = pbw_of(b)
        top = sum(sum((h - 1) * c for c in g.root) for g, h in zip(pbw.generators, pbw.heights))
        series = hilbert_series(pbw, top)
        assert sum(series.values()) == dimension(pbw)
        for alpha, c in hilbert_series(pbw, 4).items():
            assert c == len(brute_monomials(pbw, alpha))


def test_filters():
    m = (0, 1, 0, 2)
    assert in_B(m, 2) and not in_B(m, 3)
    assert in_C(m, 4) and not in_C(m, 3)
    assert in_D(m, 4) and not in_D((1, 0, 0, 0), 2)
    assert monomial_filter(m, 2, 4) and not monomial_filter(m, 3, 4)


def test_monomial_elements(ex1_pbw):
    m = (1, 0, 0, 0, 1, 0, 0)  # x2 x1
    z = ex1_pbw.monomial_element(m)
    assert z.homogeneous_degree(3) == (1, 1, 0)
    assert ex1_pbw.monomial_str(m) == "x2 x1"
    assert ex1_pbw.monomial_str((0,) * 7) == "1"


def test_unbounded_enumeration():
    from nichols.braided import BraidingMatrix
    from nichols.pbw import PbwSystem
    from nichols.weyl import GroupoidObject, positive_roots

    pbw = PbwSystem(positive_roots(GroupoidObject.of(BraidingMatrix(3, ((0,),)))))
    assert pbw.heights == [float("inf")]
    with pytest.raises(UnboundedEnumeration):
        enumerate_monomials(pbw, (2,))
    assert enumerate_monomials(pbw, (2,), bounds=[5]) == [(2,)]
