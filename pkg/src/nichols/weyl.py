"""Cartan schemes and the Weyl groupoid attached to a diagonal braiding."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .braided import BraidingMatrix
from .cyclo import INFINITE, CycScalar, multiplicative_order, q_number
from .errors import CapExceeded, IncompleteRootList, MijUnbounded

MIJ_BOUND = 64
OBJECT_CAP = 100_000
LENGTH_CAP = 10_000


def m_ij(braiding: BraidingMatrix, i: int, j: int, bound: int = MIJ_BOUND) -> int:
    """Least n >= 0 with (n+1)_{q_ii} (1 - q_ii^n q_ij q_ji) = 0."""
    theta = braiding.rank
    if not (1 <= i <= theta and 1 <= j <= theta):
        raise IndexError(f"vertex index out of range: ({i}, {j}) for rank {theta}")
    if i == j:
        raise ValueError("m_ij is defined for i != j")
    qii = braiding.q(i, i)
    mixed = braiding.q(i, j) * braiding.q(j, i)
    power = CycScalar.from_rational(1, braiding.modulus)
    for n in range(bound + 1):
        if (q_number(n + 1, qii) * (1 - power * mixed)).is_zero():
            return n
        power = power * qii
    raise MijUnbounded(i, j, bound)


def cartan_matrix(braiding: BraidingMatrix, bound: int = MIJ_BOUND) -> tuple:
    theta = braiding.rank
    return tuple(
        tuple(2 if i == j else -m_ij(braiding, i, j, bound) for j in range(1, theta + 1))
        for i in range(1, theta + 1)
    )


@dataclass(frozen=True)
class GroupoidObject:
    braiding: BraidingMatrix
    cartan: tuple

    @classmethod
    def of(cls, braiding: BraidingMatrix, bound: int = MIJ_BOUND) -> GroupoidObject:
        return cls(braiding, cartan_matrix(braiding, bound))

    @property
    def rank(self) -> int:
        return self.braiding.rank

    def reflection(self, i: int) -> list:
        """Columns s_i(alpha_j), j = 1..theta, as integer vectors."""
        theta = self.rank
        cols = []
        for j in range(theta):
            v = [0] * theta
            v[j] += 1
            v[i - 1] -= self.cartan[i - 1][j]
            cols.append(v)
        return cols


def reflect(obj: GroupoidObject, i: int, bound: int = MIJ_BOUND) -> GroupoidObject:
    """r_i(X): the braiding q'_kl = chi(s_i(alpha_k), s_i(alpha_l))."""
    b = obj.braiding
    cols = obj.reflection(i)
    exps = tuple(tuple(b.bichar_exp(cols[k], cols[l]) for l in range(b.rank)) for k in range(b.rank))
    return GroupoidObject.of(BraidingMatrix(b.modulus, exps), bound)


@dataclass
class Groupoid:
    objects: list
    edges: dict  # (object index, vertex i) -> object index


def explore_groupoid(start: GroupoidObject, cap: int = OBJECT_CAP, bound: int = MIJ_BOUND) -> Groupoid:
    index = {start.braiding: 0}
    objects = [start]
    edges = {}
    queue = deque([0])
    while queue:
        k = queue.popleft()
        for i in range(1, start.rank + 1):
            target = reflect(objects[k], i, bound)
            t = index.get(target.braiding)
            if t is None:
                if len(objects) >= cap:
                    raise CapExceeded(cap)
                t = index[target.braiding] = len(objects)
                objects.append(target)
                queue.append(t)
            edges[(k, i)] = t
    return Groupoid(objects, edges)


def root_height(q: CycScalar):
    """N_beta: the order of q_beta, infinite when q_beta = 1 or not torsion."""
    if q.is_one():
        return INFINITE
    return multiplicative_order(q)


@dataclass
class RootSystem:
    base: GroupoidObject
    positive_roots: list
    longest_word: list
    q_beta: list = field(default_factory=list)
    heights: list = field(default_factory=list)
    lyndon_words: list = field(default_factory=list)

    @property
    def size(self) -> int:
        return len(self.positive_roots)


def _apply(cols: list, v) -> list:
    theta = len(v)
    out = [0] * theta
    for j, c in enumerate(v):
        if c:
            col = cols[j]
            for k in range(theta):
                out[k] += c * col[k]
    return out


def positive_roots(start: GroupoidObject, cap: int = LENGTH_CAP, bound: int = MIJ_BOUND) -> RootSystem:
    """Positive roots read off a greedily built longest element.

    Starting from the identity, the smallest i with w(alpha_i) >= 0 extends w
    to w s_i and records beta = w(alpha_i); when every w(alpha_i) has a
    negative coordinate, w is longest and the recorded betas are all of the
    positive roots.
    """
    theta = start.rank
    cols = [[int(k == j) for k in range(theta)] for j in range(theta)]  # w(alpha_j)
    here = start
    roots = []
    word = []
    while True:
        pick = next((i for i in range(theta) if all(c >= 0 for c in cols[i])), None)
        if pick is None:
            break
        if len(word) >= cap:
            raise CapExceeded(cap, "longest word length")
        roots.append(tuple(cols[pick]))
        word.append(pick + 1)
        refl = here.reflection(pick + 1)
        cols = [_apply(cols, refl[j]) for j in range(theta)]
        here = reflect(here, pick + 1, bound)
    b = start.braiding
    qs = [b.q_root(r) for r in roots]
    return RootSystem(start, roots, word, qs, [root_height(q) for q in qs])


def lambda_plus(start: GroupoidObject, word, bound: int = MIJ_BOUND) -> set:
    """Positive roots hit an odd number of times (up to sign) along ``word``."""
    theta = start.rank
    cols = [[int(k == j) for k in range(theta)] for j in range(theta)]
    here = start
    counts = {}
    for i in word:
        beta = tuple(cols[i - 1])
        key = beta if all(c >= 0 for c in beta) else tuple(-c for c in beta)
        counts[key] = counts.get(key, 0) + 1
        refl = here.reflection(i)
        cols = [_apply(cols, refl[j]) for j in range(theta)]
        here = reflect(here, i, bound)
    return {b for b, n in counts.items() if n % 2 == 1 and all(c >= 0 for c in b)}


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def check_associated_order(order, delta_plus) -> tuple:
    """Test the two conditions characterizing orders that come from a
    reduced word.

    (a) lam < mu in L with lam + mu a root forces lam + mu in L after lam;
    (b) lam + mu in L with lam, mu roots forces one summand in L before it.
    Returns ``(ok, certificate)``; the certificate is the first offending
    ``(condition, lam, mu)`` or None.
    """
    order = [tuple(r) for r in order]
    pos = {r: k for k, r in enumerate(order)}
    delta = {tuple(r) for r in delta_plus}
    for a in range(len(order)):
        for b in range(a + 1, len(order)):
            lam, mu = order[a], order[b]
            s = _add(lam, mu)
            if s in delta and (s not in pos or pos[s] < a):
                return False, ("a", lam, mu)
    for s in order:
        for lam in delta:
            mu = tuple(x - y for x, y in zip(s, lam))
            if mu in delta and lam <= mu:
                before = [r for r in (lam, mu) if r in pos and pos[r] < pos[s]]
                if not before:
                    return False, ("b", lam, mu)
    return True, None


def check_convex(order, delta_plus=None) -> bool:
    """alpha < alpha+beta < beta whenever alpha < beta and alpha+beta is a root."""
    order = [tuple(r) for r in order]
    if len(set(order)) != len(order):
        raise IncompleteRootList("root list has repeated entries")
    if delta_plus is not None and set(order) != {tuple(r) for r in delta_plus}:
        raise IncompleteRootList("order does not list every positive root exactly once")
    pos = {r: k for k, r in enumerate(order)}
    for a in range(len(order)):
        for b in range(a + 1, len(order)):
            s = _add(order[a], order[b])
            k = pos.get(s)
            if k is not None and not a < k < b:
                return False
    return True
