"""PBW generators attached to the positive roots and monomials in them.

Roots are ordered by the lexicographic order of their Lyndon words, so
``generators[0]`` is x_1 and ``generators[-1]`` is x_theta.  A monomial is
stored as its exponent tuple (n_1, ..., n_M) and stands for the product
x_{beta_M}^{n_M} ... x_{beta_1}^{n_1}, largest generator on the left.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .braided import BraidingMatrix, FreeElem, hyperletter, multiply
from .cyclo import INFINITE, CycScalar
from .errors import NoDecomposition, UnboundedEnumeration
from .weyl import RootSystem, root_height
from .words import to_str


def order_roots(rs: RootSystem) -> RootSystem:
    """Attach l_beta to every root and sort the roots by it.

    l_beta is the largest concatenation l_d1 l_d2 over splittings
    beta = d1 + d2 into positive roots with l_d1 < l_d2, computed from the
    bottom up in total degree.
    """
    roots = [tuple(r) for r in rs.positive_roots]
    root_set = set(roots)
    lyndon = {}
    for r in sorted(roots, key=lambda r: (sum(r), r)):
        if sum(r) == 1:
            lyndon[r] = (r.index(1) + 1,)
            continue
        best = None
        for d1 in root_set:
            d2 = tuple(a - b for a, b in zip(r, d1))
            if d2 not in root_set or d1 not in lyndon or d2 not in lyndon:
                continue
            if lyndon[d1] < lyndon[d2]:
                cand = lyndon[d1] + lyndon[d2]
                if best is None or cand > best:
                    best = cand
        if best is None:
            raise NoDecomposition(r)
        lyndon[r] = best
    order = sorted(roots, key=lambda r: lyndon[r])
    b = rs.base.braiding
    qs = [b.q_root(r) for r in order]
    return replace(
        rs,
        positive_roots=order,
        q_beta=qs,
        heights=[root_height(q) for q in qs],
        lyndon_words=[lyndon[r] for r in order],
    )


@dataclass(frozen=True)
class PbwGenerator:
    root: tuple
    lyndon: tuple
    vector: FreeElem
    q_beta: CycScalar
    height: object  # int or INFINITE

    def __repr__(self):
        return f"PbwGenerator(root={self.root}, lyndon={to_str(self.lyndon)}, height={self.height})"


class PbwSystem:
    """Ordered PBW generators over a fixed braiding, with cached monomials.

    The braiding may differ from the one the roots were computed for (the
    symmetric twist uses the same roots and Lyndon words).
    """

    def __init__(self, rs: RootSystem, braiding: BraidingMatrix | None = None):
        if not getattr(rs, "lyndon_words", None):
            rs = order_roots(rs)
        self.root_system = rs
        self.braiding = braiding or rs.base.braiding
        b = self.braiding
        self.generators = [
            PbwGenerator(tuple(r), tuple(l), hyperletter(l, b), b.q_root(r), root_height(b.q_root(r)))
            for r, l in zip(rs.positive_roots, rs.lyndon_words)
        ]
        self.index_of_word = {g.lyndon: k for k, g in enumerate(self.generators)}
        self.index_of_root = {g.root: k for k, g in enumerate(self.generators)}
        self._powers = {}
        self._monomials = {}

    def __len__(self):
        return len(self.generators)

    @property
    def rank(self) -> int:
        return self.braiding.rank

    @property
    def roots(self) -> list:
        return [g.root for g in self.generators]

    @property
    def heights(self) -> list:
        return [g.height for g in self.generators]

    def power(self, k: int, n: int) -> FreeElem:
        """x_{beta_{k+1}}^n as an element of T(V)."""
        key = (k, n)
        hit = self._powers.get(key)
        if hit is None:
            if n == 0:
                hit = FreeElem.one(self.braiding.modulus)
            else:
                hit = multiply(self.power(k, n - 1), self.generators[k].vector)
            self._powers[key] = hit
        return hit

    def monomial_element(self, exponents) -> FreeElem:
        exponents = tuple(exponents)
        hit = self._monomials.get(exponents)
        if hit is None:
            hit = FreeElem.one(self.braiding.modulus)
            for k in reversed(range(len(exponents))):
                if exponents[k]:
                    hit = multiply(hit, self.power(k, exponents[k]))
            self._monomials[exponents] = hit
        return hit

    def monomial_degree(self, exponents) -> tuple:
        d = [0] * self.rank
        for n, g in zip(exponents, self.generators):
            if n:
                for t in range(self.rank):
                    d[t] += n * g.root[t]
        return tuple(d)

    def monomial_str(self, exponents) -> str:
        parts = []
        for k in reversed(range(len(exponents))):
            n = exponents[k]
            if n:
                name = _gen_name(self.generators[k].root)
                parts.append(name if n == 1 else f"{name}^{n}")
        return " ".join(parts) if parts else "1"


def _gen_name(root) -> str:
    if sum(root) == 1:
        return f"x{root.index(1) + 1}"
    terms = []
    for i, c in enumerate(root):
        if c:
            terms.append(f"a{i + 1}" if c == 1 else f"{c}a{i + 1}")
    return "x_{" + "+".join(terms) + "}"


def pbw_generators(rs: RootSystem, braiding: BraidingMatrix | None = None) -> PbwSystem:
    return PbwSystem(rs, braiding)


def monomial_filter(m, lo: int, hi: int) -> bool:
    """Membership in B_lo and C_hi (1-based generator indices)."""
    return all(n == 0 for k, n in enumerate(m) if not lo <= k + 1 <= hi)


def in_B(m, k: int) -> bool:
    return all(n == 0 for n in m[: k - 1])


def in_C(m, k: int) -> bool:
    return all(n == 0 for n in m[k:])


def in_D(m, k: int) -> bool:
    return any(n for n in m[k - 1:])


def enumerate_monomials(pbw: PbwSystem, multidegree, bounds=None, lo: int = 1, hi: int | None = None) -> list:
    """Exponent tuples of the given multidegree with n_j < N_{beta_j}.

    Only generators lo..hi (1-based, inclusive) are used.  ``bounds``
    overrides the per-generator exponent bound and is required when some
    height is infinite.
    """
    M = len(pbw)
    hi = M if hi is None else hi
    target = tuple(multidegree)
    limits = []
    for k, g in enumerate(pbw.generators):
        if bounds is not None:
            limits.append(bounds[k])
        elif g.height is INFINITE or g.height == math.inf:
            if lo <= k + 1 <= hi:
                raise UnboundedEnumeration(f"generator {k + 1} has infinite height and no bound was given")
            limits.append(1)
        else:
            limits.append(g.height)
    out = []
    exps = [0] * M

    def rec(k, remaining):
        if k < lo - 1:
            if not any(remaining):
                out.append(tuple(exps))
            return
        root = pbw.generators[k].root
        n = 0
        rem = remaining
        while True:
            exps[k] = n
            rec(k - 1, rem)
            n += 1
            if n >= limits[k]:
                break
            rem = tuple(a - b for a, b in zip(rem, root))
            if any(c < 0 for c in rem):
                break
        exps[k] = 0

    if all(c >= 0 for c in target):
        rec(hi - 1, target)
    return sorted(out, reverse=True)


def monomial_sets_BiCj(pbw: PbwSystem, i: int, j: int, multidegree) -> list:
    if i > j:
        raise ValueError("need i <= j")
    return enumerate_monomials(pbw, multidegree, lo=i, hi=j)


def hilbert_series(pbw: PbwSystem, degree_bound: int) -> dict:
    """Coefficients of prod_beta (1 + X^beta + ... + X^((N_beta - 1) beta))
    up to total degree ``degree_bound``."""
    series = {(0,) * pbw.rank: 1}
    for g in pbw.generators:
        step = sum(g.root)
        new = {}
        for deg, c in series.items():
            n = 0
            d = deg
            while sum(d) <= degree_bound and (g.height == math.inf or n < g.height):
                new[d] = new.get(d, 0) + c
                n += 1
                d = tuple(a + b for a, b in zip(d, g.root))
                if step == 0:
                    break
        series = new
    return dict(sorted(series.items()))


def dimension(pbw: PbwSystem):
    total = 1
    for g in pbw.generators:
        if g.height == math.inf:
            return INFINITE
        total *= g.height
    return total
