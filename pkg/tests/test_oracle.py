from __future__ import annotations

import json

import pytest

from nichols import catalog
from nichols.braided import BraidingMatrix, FreeElem, braided_commutator
from nichols.cyclo import q_number
from nichols.errors import DegreeBoundExceeded, NotHomogeneous
from nichols.oracle import (
    TruncatedQuotient,
    dump_graded_dims,
    graded_dim,
    graded_dims,
    gram_block,
    in_radical,
    multidegrees,
)
from nichols.pbw import hilbert_series

from conftest import pbw_of


def w(word, n):
    return FreeElem.word(word, n)


def test_rank2_block():
    b = BraidingMatrix(12, ((6, 5), (7, 6)))
    g = gram_block(b, (1, 1))
    assert g.words == [(1, 2), (2, 1)]
    assert g.matrix == [[1, b.q(2, 1)], [b.q(1, 2), 1]]


def test_trivial_blocks():
    b = catalog.A1XA1
    g = gram_block(b, (2, 0))
    assert g.matrix == [[q_number(2, b.q(1, 1))]] and g.rank == 0
    g0 = gram_block(b, (0, 0))
    assert g0.words == [()] and g0.matrix == [[1]] and g0.rank == 1


def test_rank_one_dims():
    dims = graded_dims(catalog.RANK1_I, 6)
    assert [dims[(k,)] for k in range(7)] == [1, 1, 1, 1, 0, 0, 0]
    b = BraidingMatrix(3, ((1,),))
    assert [graded_dim(b, (k,)) for k in range(5)] == [1, 1, 1, 0, 0]


def test_mixed_degree_example():
    b = BraidingMatrix(2, ((1, 0), (0, 1)))  # q_ii = -1, q_12 q_21 = 1
    assert graded_dim(b, (1, 1)) == 1


def test_symmetric_blocks_are_symmetric():
    b = catalog.EX2_SYMMETRIC
    for alpha in [(1, 1, 1), (2, 1, 1), (1, 2, 2)]:
        assert gram_block(b, alpha).is_symmetric()


def test_degree_bound():
    with pytest.raises(DegreeBoundExceeded):
        gram_block(catalog.A2, (4, 3))
    assert gram_block(catalog.A2, (4, 3), bound=7).rank == graded_dim(catalog.A2, (4, 3), 7)


def test_in_radical_examples():
    b = catalog.A1XA1
    assert in_radical(b, w((1, 1), 4))
    assert not in_radical(catalog.EX1, w((1, 2), 6))
    with pytest.raises(NotHomogeneous):
        in_radical(b, w((1,), 4) + w((1, 2), 4))
    with pytest.raises(DegreeBoundExceeded):
        in_radical(b, w((1, 2) * 4, 4))


def test_cross_degree_orthogonality_spot_check():
    from nichols.braided import pairing

    b = catalog.EX1
    assert pairing(w((1, 2), 6), w((1, 3), 6), b) == 0


@pytest.mark.parametrize("name", sorted(catalog.TEST_SET))
def test_graded_dims_match_hilbert(name):
    b = catalog.TEST_SET[name]
    series = hilbert_series(pbw_of(b), 5)
    dims = graded_dims(b, 5)
    assert all(series.get(a, 0) == d for a, d in dims.items())


def test_dump_round_trip():
    dims = graded_dims(catalog.A2, 3)
    rows = json.loads(dump_graded_dims(dims))["graded_dims"]
    assert {tuple(r["multidegree"]): r["dim"] for r in rows} == dims


def test_multidegrees():
    assert list(multidegrees(2, 2)) == [(0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0)]


def test_truncated_quotient():
    b = catalog.A1XA1
    rels = [w((1, 1), 4), w((2, 2), 4), braided_commutator(w((1,), 4), w((2,), 4), b)]
    q = TruncatedQuotient(b, rels, 4)
    assert q.dims() == {a: hilbert_series(pbw_of(b), 4).get(a, 0) for a in multidegrees(2, 4)}
    assert q.contains(w((1, 1, 2), 4))
    assert not q.contains(w((1, 2), 4))
    free = TruncatedQuotient(b, [], 3)
    assert free.dim((1, 2)) == 3
