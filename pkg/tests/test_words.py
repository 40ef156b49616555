from __future__ import annotations

from collections import Counter
from itertools import product
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy import divisors
from sympy.functions.combinatorial.numbers import mobius

from nichols.errors import EmptyWord, NotLyndon, SingleLetter
from nichols.words import (
    compare_deglex,
    compare_lex,
    degree,
    deglex_key,
    is_lyndon,
    lyndon_factorization,
    lyndon_words,
    shirshov,
    to_str,
    words_of_degree,
)

words = st.lists(st.integers(1, 3), min_size=1, max_size=8).map(tuple)


def lyndon_by_rotation(u) -> bool:
    # strictly smaller than every nontrivial rotation and aperiodic
    return all(u < u[k:] + u[:k] for k in range(1, len(u)))


def factorizations(u):
    """Every split of u into non-increasing Lyndon words (brute force)."""
    if not u:
        yield []
        return
    for k in range(1, len(u) + 1):
        head = u[:k]
        if lyndon_by_rotation(head):
            for rest in factorizations(u[k:]):
                if not rest or head >= rest[0]:
                    yield [head] + rest


def test_examples():
    assert is_lyndon((1, 2, 3, 2))
    assert not is_lyndon((1, 2, 1, 2))
    assert lyndon_factorization((2, 1, 1, 2, 1)) == [(2,), (1, 1, 2), (1,)]
    assert shirshov((1, 2, 3, 2)) == ((1, 2, 3), (2,))
    assert shirshov((1, 1, 2)) == ((1,), (1, 2))
    assert shirshov((1, 3, 2)) == ((1, 3), (2,))
    assert to_str((1, 2)) == "x1x2"
    assert to_str(()) == "1"
    assert degree((1, 3, 3), 3) == (1, 0, 2)


def test_orders():
    assert compare_lex((1, 2), (1, 2, 1)) == -1
    assert compare_lex((2,), (1, 3)) == 1
    assert compare_deglex((1,), (1, 1)) == 1
    assert compare_deglex((), (1,)) == 1
    assert compare_deglex((1, 2), (1, 2)) == 0
    assert sorted([(2,), (1, 1), ()], key=deglex_key) == [(1, 1), (2,), ()]


def test_errors():
    with pytest.raises(EmptyWord):
        is_lyndon(())
    with pytest.raises(EmptyWord):
        lyndon_factorization(())
    with pytest.raises(SingleLetter):
        shirshov((1,))
    with pytest.raises(NotLyndon):
        shirshov((2, 1))


@given(words)
def test_lyndon_matches_rotation_definition(u):
    assert is_lyndon(u) == lyndon_by_rotation(u)


@given(words)
def test_factorization_matches_exhaustive_search(u):
    found = list(factorizations(u))
    assert len(found) == 1
    assert lyndon_factorization(u) == found[0]
    assert sum(lyndon_factorization(u), ()) == u


@given(words)
def test_shirshov_is_smallest_proper_end(u):
    if len(u) < 2 or not is_lyndon(u):
        return
    v, w = shirshov(u)
    assert v + w == u
    ends = [u[k:] for k in range(1, len(u))]
    assert w == min(ends)
    assert is_lyndon(v) and is_lyndon(w)


def test_exhaustive_small_lengths():
    for n in range(1, 7):
        for u in product(range(1, 4), repeat=n):
            assert sum(lyndon_factorization(u), ()) == u
            assert lyndon_factorization(u) == next(factorizations(u))


def witt(rank: int, n: int) -> int:
    return sum(int(mobius(d)) * rank ** (n // d) for d in divisors(n)) // n


@pytest.mark.parametrize("rank", [1, 2, 3])
def test_lyndon_generator_counts(rank):
    found = list(lyndon_words(rank, 8))
    assert found == sorted(found)
    counts = Counter(len(w) for w in found)
    for n in range(1, 9):
        assert counts[n] == witt(rank, n)
    assert all(is_lyndon(w) for w in found)


def test_words_of_degree():
    ws = words_of_degree((2, 1, 1))
    assert len(ws) == factorial(4) // 2
    assert ws == sorted(ws)
    assert words_of_degree((0, 0)) == [()]
