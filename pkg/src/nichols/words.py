"""Words over the ordered alphabet 1 < 2 < ... < theta.

A word is a plain tuple of positive ints; the empty tuple is the unit.
Python's tuple ordering is already the lexicographic order in which a proper
prefix is smaller, so ``compare_lex`` is just a three-way wrapper around it.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from sympy.utilities.iterables import multiset_permutations

from .errors import EmptyWord, NotLyndon, SingleLetter

Word = tuple


def _cmp(a, b) -> int:
    return (a > b) - (a < b)


def compare_lex(u: Sequence[int], v: Sequence[int]) -> int:
    return _cmp(tuple(u), tuple(v))


def compare_deglex(u: Sequence[int], v: Sequence[int]) -> int:
    """Three-way deg-lex comparison: shorter words are greater, then lex.

    Returns 1 when ``u`` is the greater word, so the empty word beats
    everything.
    """
    if len(u) != len(v):
        return 1 if len(u) < len(v) else -1
    return compare_lex(u, v)


def deglex_key(u: Sequence[int]):
    """Sort key that orders words increasingly for deg-lex."""
    return (-len(u), tuple(u))


def degree(u: Sequence[int], rank: int) -> tuple:
    d = [0] * rank
    for letter in u:
        d[letter - 1] += 1
    return tuple(d)


def is_lyndon(u: Sequence[int]) -> bool:
    u = tuple(u)
    if not u:
        raise EmptyWord("the empty word is not a Lyndon candidate")
    return all(u < u[k:] for k in range(1, len(u)))


def lyndon_factorization(u: Sequence[int]) -> list:
    """Non-increasing Lyndon factors of ``u`` (Duval's algorithm)."""
    u = tuple(u)
    if not u:
        raise EmptyWord("cannot factor the empty word")
    n = len(u)
    factors = []
    i = 0
    while i < n:
        j, k = i + 1, i
        while j < n and u[k] <= u[j]:
            k = i if u[k] < u[j] else k + 1
            j += 1
        while i <= k:
            factors.append(u[i:i + j - k])
            i += j - k
    return factors


def shirshov(u: Sequence[int]) -> tuple:
    """Split a Lyndon word as (v, w) with w its smallest proper end."""
    u = tuple(u)
    if len(u) < 2:
        raise SingleLetter(f"Shirshov decomposition needs length >= 2: {u}")
    if not is_lyndon(u):
        raise NotLyndon(f"{u} is not Lyndon")
    k = min(range(1, len(u)), key=lambda i: u[i:])
    return u[:k], u[k:]


def words_of_degree(multidegree: Sequence[int]) -> list:
    """All words with the given letter counts, in lex order."""
    letters = [i + 1 for i, m in enumerate(multidegree) for _ in range(m)]
    if not letters:
        return [()]
    return [tuple(p) for p in multiset_permutations(letters)]


def lyndon_words(rank: int, max_length: int) -> Iterator[tuple]:
    """Lyndon words of length <= max_length in lex order (Duval's generator)."""
    w = [0]
    while w:
        w[-1] += 1
        yield tuple(w)
        m = len(w)
        while len(w) < max_length:
            w.append(w[len(w) - m])
        while w and w[-1] == rank:
            w.pop()


def to_str(u: Sequence[int]) -> str:
    return "".join(f"x{i}" for i in u) if u else "1"
