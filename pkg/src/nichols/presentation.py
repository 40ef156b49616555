"""Defining relations of B(V): power root vectors and generalized quantum
Serre relations.

Coefficients come from a symmetric braiding twist-equivalent to the input.
Over the symmetric matrix the PBW basis is orthogonal, so the coefficient of
a monomial is a ratio of pairings; the comparison map between the two
Nichols algebras rescales hyperwords by the factors f(u) below.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from math import comb

from .braided import BraidingMatrix, FreeElem, braided_commutator, pairing_for
from .cyclo import CycScalar, q_factorial, root_of_unity
from .errors import DegreeMismatch, NoDecomposition, NoSolution, NotLyndon
from .linalg import solve_field
from .oracle import DEFAULT_DEGREE_BOUND, TruncatedQuotient, _config
from .pbw import PbwSystem, _gen_name, enumerate_monomials, order_roots
from .weyl import GroupoidObject, RootSystem, positive_roots
from .words import shirshov, to_str, words_of_degree


@dataclass
class TwistData:
    braiding: BraidingMatrix
    symmetric: BraidingMatrix  # over modulus 2N
    sigma_exponents: tuple  # sigma(g_i, g_j) = zeta_2N^{sigma_exponents[i][j]}
    given_roots: RootSystem | None = None

    @property
    def modulus(self) -> int:
        return self.symmetric.modulus

    @cached_property
    def root_system(self) -> RootSystem:
        rs = self.given_roots
        if rs is None:
            rs = positive_roots(GroupoidObject.of(self.braiding))
        if not rs.lyndon_words:
            rs = order_roots(rs)
        return rs

    @cached_property
    def t(self) -> dict:
        """root -> t_beta, along the Shirshov splits of the Lyndon words."""
        rs = self.root_system
        by_word = dict(zip(map(tuple, rs.lyndon_words), map(tuple, rs.positive_roots)))
        one = root_of_unity(self.modulus, 0)
        out = {}
        for word in sorted(by_word, key=len):
            root = by_word[word]
            if len(word) == 1:
                out[root] = one
                continue
            v, w = shirshov(word)
            if v not in by_word or w not in by_word:
                raise NoDecomposition(root)
            b1, b2 = by_word[v], by_word[w]
            out[root] = self.sigma(b1, b2) * out[b1] * out[b2]
        return out

    def sigma(self, alpha, beta) -> CycScalar:
        e = 0
        for i, a in enumerate(alpha):
            if a:
                for j, b in enumerate(beta):
                    if b:
                        e += a * b * self.sigma_exponents[i][j]
        return root_of_unity(self.modulus, e)

    def is_trivial(self) -> bool:
        return not any(any(row) for row in self.sigma_exponents)

    @cached_property
    def pbw(self) -> PbwSystem:
        return PbwSystem(self.root_system, self.braiding)

    @cached_property
    def pbw_hat(self) -> PbwSystem:
        return PbwSystem(self.root_system, self.symmetric)

    @cached_property
    def norms_hat(self) -> list:
        """c_{x^_beta} = (x^_beta | x^_beta) over the symmetric matrix."""
        pair = pairing_for(self.symmetric)
        return [pair(g.vector, g.vector) for g in self.pbw_hat.generators]


def build_twist(braiding: BraidingMatrix, root_system: RootSystem | None = None) -> TwistData:
    n = braiding.modulus
    m = 2 * n
    e = braiding.exponents
    theta = braiding.rank
    hat = [[0] * theta for _ in range(theta)]
    for i in range(theta):
        hat[i][i] = 2 * e[i][i]
        for j in range(i + 1, theta):
            # canonical square root of q_ij q_ji = zeta_N^s is zeta_2N^s
            s = (e[i][j] + e[j][i]) % n
            hat[i][j] = hat[j][i] = s
    symmetric = BraidingMatrix(m, tuple(tuple(r) for r in hat))
    sig = tuple(
        tuple(((hat[i][j] - 2 * e[i][j]) % m) if i <= j else 0 for j in range(theta))
        for i in range(theta)
    )
    return TwistData(braiding, symmetric, sig, root_system)


def f_of(u, twist: TwistData) -> CycScalar:
    """f(u) for the monomial with exponent tuple ``u``."""
    roots = twist.pbw.roots
    out = root_of_unity(twist.modulus, 0)
    for i, ni in enumerate(u):
        if not ni:
            continue
        bi = roots[i]
        for j in range(i + 1, len(u)):
            if u[j]:
                out = out * twist.sigma(roots[j], bi) ** (ni * u[j])
        out = out * twist.sigma(bi, bi) ** comb(ni, 2) * twist.t[bi] ** ni
    return out


def norm_hat(u, twist: TwistData) -> CycScalar:
    """c_u^ = prod n_j!_{q_beta_j} c_{x^_beta_j}^{n_j}."""
    out = root_of_unity(twist.modulus, 0)
    for k, n in enumerate(u):
        if n:
            g = twist.pbw_hat.generators[k]
            out = out * q_factorial(n, g.q_beta) * twist.norms_hat[k] ** n
    return out


def _unit(k: int, M: int, n: int = 1) -> tuple:
    return tuple(n if t == k else 0 for t in range(M))


def coefficient(i: int, j: int, u, twist: TwistData) -> CycScalar:
    """c_{i,j}^u for 1-based generator indices i < j, reduced to the
    smallest cyclotomic field containing it."""
    pbw = twist.pbw
    M = len(pbw)
    u = tuple(u)
    bi, bj = pbw.roots[i - 1], pbw.roots[j - 1]
    target = tuple(a + b for a, b in zip(bi, bj))
    if pbw.monomial_degree(u) != target:
        raise DegreeMismatch(f"monomial degree {pbw.monomial_degree(u)} != {target}")
    swapped = tuple(a + b for a, b in zip(_unit(i - 1, M), _unit(j - 1, M)))
    if u == swapped:
        raise ValueError("x_{beta_j} x_{beta_i} is excluded from the right-hand side")
    hat = twist.pbw_hat
    pair = pairing_for(twist.symmetric)
    lhs = hat.generators[i - 1].vector * hat.generators[j - 1].vector
    num = f_of(u, twist) * pair(lhs, hat.monomial_element(u))
    c_u = norm_hat(u, twist)
    assert not c_u.is_zero(), "PBW norm vanished"
    den = twist.sigma(bi, bj) * twist.t[bi] * twist.t[bj] * c_u
    return (num / den).reduced()


# --------------------------------------------------------------------------
# relations


@dataclass
class Relation:
    kind: str  # "power" or "commutator"
    degree: tuple
    root: tuple | None = None
    exponent: int | None = None
    pair: tuple | None = None  # 1-based (i, j)
    rhs: list = field(default_factory=list)  # [(exponent tuple, CycScalar)]
    redundant: bool | None = None

    def lhs_element(self, pbw: PbwSystem) -> FreeElem:
        if self.kind == "power":
            return pbw.power(pbw.index_of_root[self.root], self.exponent)
        i, j = self.pair
        gi, gj = pbw.generators[i - 1], pbw.generators[j - 1]
        return braided_commutator(gi.vector, gj.vector, pbw.braiding)

    def element(self, pbw: PbwSystem) -> FreeElem:
        """LHS - RHS in T(V)."""
        z = self.lhs_element(pbw)
        for mono, c in self.rhs:
            z = z - pbw.monomial_element(mono).scale(c)
        return z

    def sort_key(self):
        if self.kind == "power":
            return (0, sum(self.degree), self.degree)
        return (1, self.pair, sum(self.degree), self.degree)


@dataclass
class Presentation:
    pbw: PbwSystem
    relations: list

    def to_json(self) -> dict:
        pbw = self.pbw
        rels = []
        for r in self.relations:
            item = {"kind": r.kind}
            if r.kind == "power":
                item["root"] = list(r.root)
                item["exponent"] = r.exponent
            else:
                item["pair"] = list(r.pair)
            item["lhs_words"] = r.lhs_element(pbw).to_json()
            item["rhs_terms"] = [
                {"monomial": list(m), "name": pbw.monomial_str(m), "coeff": c.to_json(), "display": str(c)}
                for m, c in r.rhs
            ]
            item["degree"] = list(r.degree)
            if r.redundant is not None:
                item["redundant"] = r.redundant
            rels.append(item)
        gens = [
            {"root": list(g.root), "lyndon": list(g.lyndon), "name": _gen_name(g.root),
             "height": g.height if g.height != float("inf") else None}
            for g in pbw.generators
        ]
        return {"generators": pbw.rank, "pbw_generators": gens, "relations": rels}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    def to_text(self) -> str:
        lines = []
        for r in self.relations:
            lines.append(relation_str(r, self.pbw))
        return "\n".join(lines)


def relation_str(r: Relation, pbw: PbwSystem) -> str:
    if r.kind == "power":
        lhs = f"{_gen_name(r.root)}^{r.exponent}"
    else:
        i, j = r.pair
        lhs = f"[{_gen_name(pbw.roots[i - 1])}, {_gen_name(pbw.roots[j - 1])}]_c"
    if not r.rhs:
        text = f"{lhs} = 0"
    else:
        terms = []
        for m, c in r.rhs:
            cs = str(c)
            name = pbw.monomial_str(m)
            if cs == "1":
                terms.append(name)
            elif " " in cs or cs.startswith("-"):
                terms.append(f"({cs}) {name}")
            else:
                terms.append(f"{cs} {name}")
        text = f"{lhs} = " + " + ".join(terms)
    if r.redundant:
        text += "   [redundant]"
    return text


def admissible_pairs(pbw: PbwSystem) -> list:
    words = [g.lyndon for g in pbw.generators]
    known = set(words)
    out = []
    for i in range(len(words)):
        for j in range(i + 1, len(words)):
            w = words[i] + words[j]
            if w in known:
                continue
            try:
                if shirshov(w) != (words[i], words[j]):
                    continue
            except NotLyndon:
                continue
            out.append((i + 1, j + 1))
    return out


def rhs_support(pbw: PbwSystem, i: int, j: int) -> list:
    """Monomials in B_i cap C_j of degree beta_i + beta_j, minus x_j x_i."""
    M = len(pbw)
    target = tuple(a + b for a, b in zip(pbw.roots[i - 1], pbw.roots[j - 1]))
    cap = sum(target) + 1
    bounds = [h if h != float("inf") else cap for h in pbw.heights]
    swapped = tuple(a + b for a, b in zip(_unit(i - 1, M), _unit(j - 1, M)))
    return [m for m in enumerate_monomials(pbw, target, bounds=bounds, lo=i, hi=j) if m != swapped]


def commutator_relation(i: int, j: int, twist: TwistData) -> Relation:
    pbw = twist.pbw
    target = tuple(a + b for a, b in zip(pbw.roots[i - 1], pbw.roots[j - 1]))
    rhs = []
    for m in rhs_support(pbw, i, j):
        c = coefficient(i, j, m, twist)
        if not c.is_zero():
            rhs.append((m, c))
    return Relation("commutator", target, pair=(i, j), rhs=rhs)


def power_relations(pbw: PbwSystem) -> list:
    out = []
    for g in pbw.generators:
        if g.height != float("inf"):
            deg = tuple(g.height * a for a in g.root)
            out.append(Relation("power", deg, root=g.root, exponent=g.height))
    return out


def emit_presentation(source, mark_redundant: bool = False, bound: int = DEFAULT_DEGREE_BOUND) -> Presentation:
    """All relations of the presentation.  ``source`` is a BraidingMatrix,
    a RootSystem or a TwistData."""
    if isinstance(source, TwistData):
        twist = source
    elif isinstance(source, RootSystem):
        twist = build_twist(source.base.braiding, source)
    else:
        twist = build_twist(source)
    pbw = twist.pbw
    rels = power_relations(pbw)
    for i, j in admissible_pairs(pbw):
        rels.append(commutator_relation(i, j, twist))
    rels.sort(key=Relation.sort_key)
    pres = Presentation(pbw, rels)
    if mark_redundant:
        mark_redundant_relations(pres, bound)
    return pres


def mark_redundant_relations(pres: Presentation, bound: int = DEFAULT_DEGREE_BOUND) -> None:
    """Flag relations of total degree <= bound lying in the truncated ideal
    generated by all the other relations; the rest get ``None``."""
    pbw = pres.pbw
    elems = [r.element(pbw) for r in pres.relations]
    for k, r in enumerate(pres.relations):
        if sum(r.degree) > bound:
            r.redundant = None
            continue
        others = [e for t, e in enumerate(elems) if t != k and sum(pres.relations[t].degree) <= sum(r.degree)]
        q = TruncatedQuotient(pbw.braiding, others, sum(r.degree))
        r.redundant = q.contains(elems[k])


# --------------------------------------------------------------------------
# independent cross-check


def solve_coefficients_oracle(i: int, j: int, pbw: PbwSystem, bound=None) -> list:
    """Coefficients c_u with [x_i, x_j]_c - sum c_u u in the radical,
    found by linear algebra against every word of the degree."""
    target = tuple(a + b for a, b in zip(pbw.roots[i - 1], pbw.roots[j - 1]))
    cfg = _config(bound)
    cfg.check(sum(target))
    B = pbw.braiding
    pair = pairing_for(B)
    support = rhs_support(pbw, i, j)
    lhs = braided_commutator(pbw.generators[i - 1].vector, pbw.generators[j - 1].vector, B)
    words = words_of_degree(target)
    zero = CycScalar.from_rational(0, B.modulus)
    rhs_vec = pair.dual_vector(lhs)
    cols = []
    for m in support:
        dv = pair.dual_vector(pbw.monomial_element(m))
        cols.append([dv.get(w, zero) for w in words])
    sol = solve_field(cols, [rhs_vec.get(w, zero) for w in words], B.modulus)
    if sol is None:
        raise NoSolution(f"no combination of B_{i} cap C_{j} matches [x_{i}, x_{j}]_c")
    return [(m, c.reduced()) for m, c in zip(support, sol) if not c.is_zero()]


def lyndon_display(pbw: PbwSystem) -> list:
    return [(g.root, to_str(g.lyndon), g.height) for g in pbw.generators]
