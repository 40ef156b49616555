"""Degree-truncated ground truth for B(V).

B(V) is T(V) modulo the radical of the pairing, so its graded pieces are
ranks of Gram blocks and membership in I(V) is a finite check against all
words of one multidegree.  A second routine computes the truncated quotient
of T(V) by an ideal generated by given relations, for completeness checks.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from functools import cached_property

from .braided import BraidingMatrix, FreeElem, pairing_for
from .cyclo import CycScalar, _field
from .errors import DegreeBoundExceeded
from .linalg import bareiss_echelon, rank_field, realify_rows
from .words import words_of_degree

DEFAULT_DEGREE_BOUND = 6
HARD_DEGREE_CAP = 12


@dataclass(frozen=True)
class OracleConfig:
    degree_bound: int = DEFAULT_DEGREE_BOUND
    hard_cap: int = HARD_DEGREE_CAP

    def check(self, total: int) -> None:
        if total > min(self.degree_bound, self.hard_cap):
            raise DegreeBoundExceeded(total, min(self.degree_bound, self.hard_cap))


def _config(bound) -> OracleConfig:
    if isinstance(bound, OracleConfig):
        return bound
    return OracleConfig(DEFAULT_DEGREE_BOUND if bound is None else bound)


@dataclass
class GramBlock:
    multidegree: tuple
    words: list
    matrix: list  # matrix[a][b] = (words[a] | words[b])
    modulus: int

    @cached_property
    def rank(self) -> int:
        return rank_field(self.matrix, self.modulus)

    def is_symmetric(self) -> bool:
        n = len(self.words)
        return all(self.matrix[a][b] == self.matrix[b][a] for a in range(n) for b in range(a))


def gram_block(braiding: BraidingMatrix, multidegree, bound=None) -> GramBlock:
    cfg = _config(bound)
    alpha = tuple(multidegree)
    cfg.check(sum(alpha))
    words = words_of_degree(alpha)
    pair = pairing_for(braiding)
    z = CycScalar.from_rational(0, braiding.modulus)
    matrix = [[z] * len(words) for _ in words]
    for b, v in enumerate(words):
        col = pair.dual(v)
        for a, u in enumerate(words):
            c = col.get(u)
            if c is not None:
                matrix[a][b] = c
    return GramBlock(alpha, words, matrix, braiding.modulus)


def graded_dim(braiding: BraidingMatrix, multidegree, bound=None) -> int:
    return gram_block(braiding, multidegree, bound).rank


def multidegrees(rank: int, max_total: int):
    """All multidegrees of total degree <= max_total, by total then lex."""
    for total in range(max_total + 1):
        for combo in sorted(_compositions(total, rank)):
            yield combo


def _compositions(total: int, parts: int):
    for cuts in itertools.combinations(range(total + parts - 1), parts - 1):
        prev = -1
        out = []
        for c in cuts + (total + parts - 1,):
            out.append(c - prev - 1)
            prev = c
        yield tuple(out)


def graded_dims(braiding: BraidingMatrix, max_total: int = DEFAULT_DEGREE_BOUND, bound=None) -> dict:
    bound = max_total if bound is None else bound
    return {a: graded_dim(braiding, a, bound) for a in multidegrees(braiding.rank, max_total)}


def dump_graded_dims(dims: dict) -> str:
    rows = [{"multidegree": list(a), "dim": d} for a, d in sorted(dims.items(), key=lambda t: (sum(t[0]), t[0]))]
    return json.dumps({"graded_dims": rows}, indent=2)


def in_radical(braiding: BraidingMatrix, z: FreeElem, bound=None) -> bool:
    """True iff (w | z) = 0 for every word w of the degree of z."""
    cfg = _config(bound)
    alpha = z.homogeneous_degree(braiding.rank)
    cfg.check(sum(alpha))
    return not pairing_for(braiding).dual_vector(z)


@dataclass
class TruncatedQuotient:
    """T(V) modulo the two-sided ideal generated by homogeneous relations,
    computed multidegree by multidegree up to a total degree bound.

    I_alpha = sum_i x_i I_{alpha - alpha_i} + sum_i I_{alpha - alpha_i} x_i
    + span(relations of degree alpha); each I_alpha is kept as integer rows
    spanning its realification over Q.
    """

    braiding: BraidingMatrix
    relations: list
    max_total: int
    _basis: dict = field(default_factory=dict, repr=False)
    _rel_by_degree: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        for r in self.relations:
            if r.is_zero():
                continue
            d = r.homogeneous_degree(self.braiding.rank)
            self._rel_by_degree.setdefault(d, []).append(r)

    @property
    def phi(self) -> int:
        return _field(self.braiding.modulus).phi

    def _index(self, alpha) -> dict:
        return {w: k for k, w in enumerate(words_of_degree(alpha))}

    def ideal_rows(self, alpha) -> list:
        alpha = tuple(alpha)
        hit = self._basis.get(alpha)
        if hit is not None:
            return hit
        if sum(alpha) > self.max_total:
            raise DegreeBoundExceeded(sum(alpha), self.max_total)
        phi = self.phi
        index = self._index(alpha)
        width = len(index) * phi
        rows = []
        for i in range(len(alpha)):
            if not alpha[i]:
                continue
            beta = alpha[:i] + (alpha[i] - 1,) + alpha[i + 1:]
            sub = self.ideal_rows(beta)
            if not sub:
                continue
            sub_words = words_of_degree(beta)
            left = [index[(i + 1,) + w] for w in sub_words]
            right = [index[w + (i + 1,)] for w in sub_words]
            for perm in (left, right):
                for r in sub:
                    new = [0] * width
                    for k, pos in enumerate(perm):
                        base = k * phi
                        tgt = pos * phi
                        for t in range(phi):
                            new[tgt + t] = r[base + t]
                    rows.append(new)
        rels = self._rel_by_degree.get(alpha, [])
        if rels:
            mat = []
            words = list(index)
            for r in rels:
                mat.append([r.coefficient(w) for w in words])
            rows.extend(realify_rows(mat, self.braiding.modulus))
        basis = bareiss_echelon(rows)
        self._basis[alpha] = basis
        return basis

    def dim(self, alpha) -> int:
        alpha = tuple(alpha)
        n = len(words_of_degree(alpha))
        r = len(self.ideal_rows(alpha))
        assert r % self.phi == 0
        return n - r // self.phi

    def dims(self) -> dict:
        return {a: self.dim(a) for a in multidegrees(self.braiding.rank, self.max_total)}

    def contains(self, z: FreeElem) -> bool:
        """Whether a homogeneous z lies in the truncated ideal."""
        alpha = z.homogeneous_degree(self.braiding.rank)
        basis = self.ideal_rows(alpha)
        words = words_of_degree(alpha)
        extra = realify_rows([[z.coefficient(w) for w in words]], self.braiding.modulus)
        return len(bareiss_echelon(basis + extra)) == len(basis)
