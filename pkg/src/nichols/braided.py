"""The braided tensor algebra T(V) of a diagonal braiding.

Elements of T(V) are finite linear combinations of words (``FreeElem``),
elements of T(V) (x) T(V) are combinations of word pairs (``TensorElem``).
Every braiding entry is a power of a fixed root of unity zeta_N, so the
bicharacter is evaluated on exponents and only turned into a ``CycScalar``
at the end.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .cyclo import CycScalar, root_of_unity
from .errors import NotHomogeneous
from .words import is_lyndon, lyndon_factorization, shirshov, to_str


@dataclass(frozen=True)
class BraidingMatrix:
    """Diagonal braiding q_ij = zeta_N^(exponents[i-1][j-1])."""

    modulus: int
    exponents: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(e) % self.modulus for e in row) for row in self.exponents)
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("braiding matrix must be square")
        object.__setattr__(self, "exponents", rows)

    @property
    def rank(self) -> int:
        return len(self.exponents)

    def q(self, i: int, j: int) -> CycScalar:
        """Entry q_ij, vertices numbered from 1."""
        return root_of_unity(self.modulus, self.exponents[i - 1][j - 1])

    def bichar_exp(self, alpha: Sequence[int], beta: Sequence[int]) -> int:
        e = self.exponents
        total = 0
        for i, a in enumerate(alpha):
            if a:
                row = e[i]
                for j, b in enumerate(beta):
                    if b:
                        total += a * b * row[j]
        return total % self.modulus

    def bichar(self, alpha: Sequence[int], beta: Sequence[int]) -> CycScalar:
        return root_of_unity(self.modulus, self.bichar_exp(alpha, beta))

    def q_root(self, beta: Sequence[int]) -> CycScalar:
        """q_beta = chi(beta, beta)."""
        return self.bichar(beta, beta)

    def lift(self, modulus: int) -> BraidingMatrix:
        if modulus % self.modulus:
            raise ValueError(f"cannot lift modulus {self.modulus} to {modulus}")
        k = modulus // self.modulus
        return BraidingMatrix(modulus, tuple(tuple(k * e for e in row) for row in self.exponents))

    def is_symmetric(self) -> bool:
        e = self.exponents
        return all(e[i][j] == e[j][i] for i in range(self.rank) for j in range(i))

    def simple_root(self, i: int) -> tuple:
        return tuple(int(k == i - 1) for k in range(self.rank))

    def degree(self, word: Sequence[int]) -> tuple:
        d = [0] * self.rank
        for letter in word:
            d[letter - 1] += 1
        return tuple(d)


def bichar(alpha, beta, braiding: BraidingMatrix) -> CycScalar:
    return braiding.bichar(alpha, beta)


# --------------------------------------------------------------------------
# linear combinations


class _LinComb:
    __slots__ = ("terms", "modulus")

    def __init__(self, terms=None, modulus: int = 1):
        self.modulus = modulus
        clean = {}
        for k, c in (terms or {}).items():
            if not isinstance(c, CycScalar):
                c = CycScalar.from_rational(c, modulus)
            if not c.is_zero():
                clean[k] = c
        self.terms = clean

    @classmethod
    def _trusted(cls, terms: dict, modulus: int):
        obj = object.__new__(cls)
        obj.terms = terms
        obj.modulus = modulus
        return obj

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms))

    def items(self):
        return sorted(self.terms.items())

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, key) -> CycScalar:
        c = self.terms.get(key)
        return c if c is not None else CycScalar.from_rational(0, self.modulus)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        if not isinstance(other, type(self)):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def _combine(self, other, sign: int):
        out = dict(self.terms)
        for k, c in other.terms.items():
            prev = out.get(k)
            new = (prev + c if sign > 0 else prev - c) if prev is not None else (c if sign > 0 else -c)
            if new.is_zero():
                out.pop(k, None)
            else:
                out[k] = new
        return type(self)._trusted(out, self.modulus)

    def __add__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return self._combine(other, 1)

    def __sub__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return self._combine(other, -1)

    def __neg__(self):
        return type(self)._trusted({k: -c for k, c in self.terms.items()}, self.modulus)

    def scale(self, s) -> _LinComb:
        if isinstance(s, CycScalar) and s.is_zero() or (not isinstance(s, CycScalar) and s == 0):
            return type(self)._trusted({}, self.modulus)
        if isinstance(s, CycScalar) and s.modulus != self.modulus:
            s = s.reduced().lift(self.modulus)
        out = {}
        for k, c in self.terms.items():
            v = c * s
            if not v.is_zero():
                out[k] = v
        return type(self)._trusted(out, self.modulus)

    def scale_root(self, e: int) -> _LinComb:
        """Multiply by zeta_N^e where N is this element's modulus."""
        return type(self)._trusted({k: c.times_root(e) for k, c in self.terms.items()}, self.modulus)


class FreeElem(_LinComb):
    """A finitely supported combination of words: an element of T(V)."""

    __slots__ = ()

    @classmethod
    def word(cls, word: Sequence[int], modulus: int, coeff=1) -> FreeElem:
        return cls({tuple(word): coeff}, modulus)

    @classmethod
    def one(cls, modulus: int) -> FreeElem:
        return cls.word((), modulus)

    @classmethod
    def zero(cls, modulus: int) -> FreeElem:
        return cls._trusted({}, modulus)

    def __mul__(self, other):
        if isinstance(other, FreeElem):
            return multiply(self, other)
        if isinstance(other, (CycScalar, int)) or hasattr(other, "denominator"):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (CycScalar, int)) or hasattr(other, "denominator"):
            return self.scale(other)
        return NotImplemented

    def degrees(self, rank: int) -> set:
        out = set()
        for w in self.terms:
            d = [0] * rank
            for letter in w:
                d[letter - 1] += 1
            out.add(tuple(d))
        return out

    def homogeneous_degree(self, rank: int) -> tuple:
        """The common multidegree of all terms; zero counts as degree 0."""
        degs = self.degrees(rank)
        if not degs:
            return (0,) * rank
        if len(degs) > 1:
            raise NotHomogeneous(f"element has terms in degrees {sorted(degs)}")
        return next(iter(degs))

    def is_homogeneous(self, rank: int) -> bool:
        return len(self.degrees(rank)) <= 1

    def components(self, rank: int) -> dict:
        out = {}
        for w, c in self.terms.items():
            d = tuple(sum(1 for x in w if x == i + 1) for i in range(rank))
            out.setdefault(d, {})[w] = c
        return {d: FreeElem._trusted(t, self.modulus) for d, t in out.items()}

    def to_json(self) -> list:
        return [{"word": list(w), "coeff": c.to_json()} for w, c in self.items()]

    @classmethod
    def from_json(cls, data: list, modulus: int) -> FreeElem:
        terms = {}
        for item in data:
            terms[tuple(item["word"])] = CycScalar.from_json(item["coeff"]).lift(modulus)
        return cls(terms, modulus)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.items():
            cs = str(c)
            if cs == "1":
                parts.append(to_str(w))
            elif cs == "-1":
                parts.append("-" + to_str(w))
            else:
                parts.append(f"({cs}) {to_str(w)}")
        return " + ".join(parts).replace("+ -", "- ")


class TensorElem(_LinComb):
    """A combination of pairs of words: an element of T(V) (x) T(V)."""

    __slots__ = ()

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c}) {to_str(a)}(x){to_str(b)}" for (a, b), c in self.items())


# --------------------------------------------------------------------------
# algebra operations


def multiply(a: FreeElem, b: FreeElem) -> FreeElem:
    out = {}
    for u, c in a.terms.items():
        for v, d in b.terms.items():
            w = u + v
            cd = c * d
            prev = out.get(w)
            out[w] = cd if prev is None else prev + cd
    return FreeElem._trusted({w: c for w, c in out.items() if not c.is_zero()}, a.modulus)


def braided_commutator(a: FreeElem, b: FreeElem, braiding: BraidingMatrix) -> FreeElem:
    """[a, b]_c = ab - chi(deg a, deg b) ba for homogeneous a, b."""
    alpha = a.homogeneous_degree(braiding.rank)
    beta = b.homogeneous_degree(braiding.rank)
    e = braiding.bichar_exp(alpha, beta)
    return multiply(a, b) - multiply(b, a).scale_root(_rel_exp(braiding, e, a.modulus))


def _rel_exp(braiding: BraidingMatrix, e: int, modulus: int) -> int:
    # exponent of zeta_braiding^e expressed over zeta_modulus
    if modulus == braiding.modulus:
        return e
    if modulus % braiding.modulus:
        raise ValueError("element modulus must be a multiple of the braiding modulus")
    return e * (modulus // braiding.modulus)


def ad(x: FreeElem, y: FreeElem, braiding: BraidingMatrix, times: int = 1) -> FreeElem:
    """(ad_c x)^times y."""
    for _ in range(times):
        y = braided_commutator(x, y, braiding)
    return y


@lru_cache(maxsize=None)
def _hyperletter(braiding: BraidingMatrix, word: tuple) -> FreeElem:
    n = braiding.modulus
    if len(word) <= 1:
        return FreeElem.word(word, n)
    if is_lyndon(word):
        v, w = shirshov(word)
        return braided_commutator(_hyperletter(braiding, v), _hyperletter(braiding, w), braiding)
    out = FreeElem.one(n)
    for factor in lyndon_factorization(word):
        out = multiply(out, _hyperletter(braiding, factor))
    return out


def hyperletter(word: Sequence[int], braiding: BraidingMatrix) -> FreeElem:
    """The bracketing [u]_c of a word (Shirshov recursion on Lyndon words,
    product over the Lyndon factors otherwise)."""
    return _hyperletter(braiding, tuple(word))


def coproduct(a: FreeElem, braiding: BraidingMatrix) -> TensorElem:
    """Braided coproduct: letters are primitive, products use
    (a(x)b)(c(x)d) = chi(deg b, deg c) ac (x) bd."""
    e = braiding.exponents
    n = braiding.modulus
    out = {}
    for word, c in a.terms.items():
        length = len(word)
        for mask in range(1 << length):
            left = []
            right = []
            exp = 0
            for k, letter in enumerate(word):
                if mask >> k & 1:
                    # letter goes left: braid it past every earlier right letter
                    for r in right:
                        exp += e[r - 1][letter - 1]
                    left.append(letter)
                else:
                    right.append(letter)
            key = (tuple(left), tuple(right))
            val = c.times_root(_rel_exp(braiding, exp % n, c.modulus))
            prev = out.get(key)
            out[key] = val if prev is None else prev + val
    return TensorElem._trusted({k: v for k, v in out.items() if not v.is_zero()}, a.modulus)


def tensor_multiply(x: TensorElem, y: TensorElem, braiding: BraidingMatrix) -> TensorElem:
    out = {}
    for (a, b), c in x.terms.items():
        db = braiding.degree(b)
        for (cc, d), c2 in y.terms.items():
            exp = braiding.bichar_exp(db, braiding.degree(cc))
            val = (c * c2).times_root(_rel_exp(braiding, exp, x.modulus))
            key = (a + cc, b + d)
            prev = out.get(key)
            out[key] = val if prev is None else prev + val
    return TensorElem._trusted({k: v for k, v in out.items() if not v.is_zero()}, x.modulus)


def counit(a: FreeElem) -> CycScalar:
    return a.coefficient(())


# --------------------------------------------------------------------------
# the canonical pairing


class Pairing:
    """The bilinear form with (1|1) = 1, (x_i|x_j) = delta_ij and
    (x x'|y) = (x|y_(1)) (x'|y_(2)).

    ``dual(v)`` maps a word v to the combination sum_u (u|v) u; it is built
    from the coproduct component of bidegree (1, len-1) of v and memoized
    per word.  When the braiding matrix is symmetric the form is symmetric
    and also satisfies (x|y y') = (x_(1)|y) (x_(2)|y').
    """

    def __init__(self, braiding: BraidingMatrix):
        self.braiding = braiding
        self._cache = {(): {(): root_of_unity(braiding.modulus, 0)}}

    def clear(self):
        self._cache = {(): {(): root_of_unity(self.braiding.modulus, 0)}}

    def dual(self, v: tuple) -> dict:
        v = tuple(v)
        hit = self._cache.get(v)
        if hit is not None:
            return hit
        e = self.braiding.exponents
        out = {}
        seen = {}
        exp = 0
        prefix_letters = []
        for k, letter in enumerate(v):
            # chi(deg v_<k, alpha_letter)
            exp = 0
            for p in prefix_letters:
                exp += e[p - 1][letter - 1]
            prefix_letters.append(letter)
            rest = v[:k] + v[k + 1:]
            key = (letter, exp % self.braiding.modulus, rest)
            seen[key] = seen.get(key, 0) + 1
        for (letter, exp, rest), mult in seen.items():
            sub = self.dual(rest)
            for u, c in sub.items():
                w = (letter,) + u
                val = c.times_root(exp)
                if mult != 1:
                    val = val * mult
                prev = out.get(w)
                out[w] = val if prev is None else prev + val
        out = {w: c for w, c in out.items() if not c.is_zero()}
        self._cache[v] = out
        return out

    def dual_vector(self, z: FreeElem) -> dict:
        """sum_u (u|z) u, as a dict word -> scalar without zeros."""
        out = {}
        for v, c in z.terms.items():
            for u, p in self.dual(v).items():
                val = p * c
                prev = out.get(u)
                out[u] = val if prev is None else prev + val
        return {u: c for u, c in out.items() if not c.is_zero()}

    def __call__(self, a: FreeElem, b: FreeElem) -> CycScalar:
        total = CycScalar.from_rational(0, self.braiding.modulus)
        dv = self.dual_vector(b)
        for u, c in a.terms.items():
            p = dv.get(u)
            if p is not None:
                total = total + c * p
        return total

    def words(self, u: Sequence[int], v: Sequence[int]) -> CycScalar:
        p = self.dual(tuple(v)).get(tuple(u))
        return p if p is not None else CycScalar.from_rational(0, self.braiding.modulus)


@lru_cache(maxsize=64)
def pairing_for(braiding: BraidingMatrix) -> Pairing:
    return Pairing(braiding)


def pairing(a: FreeElem, b: FreeElem, braiding: BraidingMatrix) -> CycScalar:
    return pairing_for(braiding)(a, b)
