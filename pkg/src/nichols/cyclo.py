"""Exact arithmetic in the cyclotomic fields Q(zeta_N).

An element is stored as its coefficient vector in the power basis
1, z, ..., z^(phi(N)-1) modulo the N-th cyclotomic polynomial.  Coefficients
are Python ints where possible and ``Fraction`` otherwise, so equality is
plain tuple equality once both operands share a modulus.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from sympy import Poly, cyclotomic_poly, symbols, totient
from sympy.functions.combinatorial.numbers import mobius

from .errors import ZeroArgument

__all__ = [
    "CycScalar",
    "INFINITE",
    "lift",
    "multiplicative_order",
    "q_binomial",
    "q_factorial",
    "q_number",
    "root_of_unity",
]

INFINITE = math.inf


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class _Field:
    """Precomputed tables for Q(zeta_N)."""

    def __init__(self, n: int):
        self.n = n
        x = symbols("x")
        # cyclotomic_poly coefficients, highest degree first
        cp = Poly(cyclotomic_poly(n, x), x).all_coeffs()
        self.phi = phi = len(cp) - 1
        assert phi == int(totient(n))
        low = [int(c) for c in reversed(cp[1:])]  # c_0 .. c_{phi-1}
        # powers[e] = coefficient vector of zeta^e, 0 <= e < n
        powers = []
        vec = [0] * phi
        vec[0] = 1
        for _ in range(n):
            powers.append(tuple(vec))
            top = vec[-1]
            vec = [0] + vec[:-1]
            if top:
                vec = [v - top * c for v, c in zip(vec, low)]
        self.powers = powers
        self.sparse_powers = [tuple((k, c) for k, c in enumerate(p) if c) for p in powers]
        self.zero = (0,) * phi
        self.one = powers[0]
        # normalized trace Tr(zeta^k)/phi(N); invariant under lifting
        traces = []
        for k in range(phi):
            g = math.gcd(k, n)
            m = n // g
            traces.append(Fraction(int(mobius(m)), int(totient(m))))
        self.traces = traces


@lru_cache(maxsize=None)
def _field(n: int) -> _Field:
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    return _Field(n)


class CycScalar:
    """An exact element of Q(zeta_N); immutable."""

    __slots__ = ("modulus", "coeffs", "_hash")

    def __init__(self, modulus: int, coeffs):
        f = _field(modulus)
        coeffs = tuple(_norm(c) for c in coeffs)
        if len(coeffs) != f.phi:
            raise ValueError(f"expected {f.phi} coefficients for modulus {modulus}")
        self.modulus = modulus
        self.coeffs = coeffs
        self._hash = None

    @classmethod
    def _raw(cls, modulus: int, coeffs: tuple) -> CycScalar:
        obj = object.__new__(cls)
        obj.modulus = modulus
        obj.coeffs = coeffs
        obj._hash = None
        return obj

    @classmethod
    def from_rational(cls, value, modulus: int = 1) -> CycScalar:
        f = _field(modulus)
        return cls._raw(modulus, (_norm(Fraction(value)),) + f.zero[1:])

    # ----------------------------------------------------------------- basics
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs == _field(self.modulus).one

    def __bool__(self) -> bool:
        return not self.is_zero()

    def lift(self, modulus: int) -> CycScalar:
        """Re-express in Q(zeta_modulus); ``modulus`` must be a multiple."""
        if modulus == self.modulus:
            return self
        if modulus % self.modulus:
            raise ValueError(f"cannot lift modulus {self.modulus} to {modulus}")
        step = modulus // self.modulus
        g = _field(modulus)
        out = [0] * g.phi
        for k, c in enumerate(self.coeffs):
            if c:
                for j, v in g.sparse_powers[(k * step) % modulus]:
                    out[j] += c * v
        return CycScalar._raw(modulus, tuple(_norm(c) for c in out))

    def _coerce(self, other):
        if isinstance(other, CycScalar):
            if other.modulus == self.modulus:
                return self, other
            m = math.lcm(self.modulus, other.modulus)
            return self.lift(m), other.lift(m)
        if isinstance(other, (int, Rational)):
            return self, CycScalar.from_rational(other, self.modulus)
        return None, None

    # ------------------------------------------------------------ arithmetic
    def __add__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return CycScalar._raw(a.modulus, tuple(_norm(x + y) for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycScalar._raw(self.modulus, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return CycScalar._raw(a.modulus, tuple(_norm(x - y) for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            return CycScalar._raw(self.modulus, tuple(_norm(x * other) for x in self.coeffs))
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        f = _field(a.modulus)
        out = [0] * f.phi
        sp = f.sparse_powers
        n = a.modulus
        for i, x in enumerate(a.coeffs):
            if not x:
                continue
            for j, y in enumerate(b.coeffs):
                if not y:
                    continue
                xy = x * y
                for k, v in sp[(i + j) % n]:
                    out[k] += xy * v
        return CycScalar._raw(a.modulus, tuple(_norm(c) for c in out))

    __rmul__ = __mul__

    def times_root(self, e: int) -> CycScalar:
        """Multiply by zeta_N^e (cheap rotation in the power basis)."""
        f = _field(self.modulus)
        e %= self.modulus
        if e == 0:
            return self
        out = [0] * f.phi
        sp = f.sparse_powers
        for i, x in enumerate(self.coeffs):
            if x:
                for k, v in sp[(i + e) % self.modulus]:
                    out[k] += x * v
        return CycScalar._raw(self.modulus, tuple(_norm(c) for c in out))

    def inv(self) -> CycScalar:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        f = _field(self.modulus)
        n = f.phi
        if n == 1:
            return CycScalar._raw(self.modulus, (_norm(Fraction(1) / self.coeffs[0]),))
        # column k of the multiplication matrix is self * zeta^k
        cols = [self.times_root(k).coeffs for k in range(n)]
        rows = [[Fraction(cols[k][r]) for k in range(n)] + [Fraction(int(r == 0))] for r in range(n)]
        for c in range(n):
            p = next(r for r in range(c, n) if rows[r][c])
            rows[c], rows[p] = rows[p], rows[c]
            piv = rows[c][c]
            rows[c] = [v / piv for v in rows[c]]
            for r in range(n):
                if r != c and rows[r][c]:
                    fac = rows[r][c]
                    rows[r] = [v - fac * w for v, w in zip(rows[r], rows[c])]
        return CycScalar._raw(self.modulus, tuple(_norm(rows[r][n]) for r in range(n)))

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (Fraction(1) / Fraction(other))
        a, b = self._coerce(other)
        if a is None:
            return NotImplemented
        return a * b.inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    def __pow__(self, e: int) -> CycScalar:
        if e < 0:
            return self.inv() ** (-e)
        result = CycScalar._raw(self.modulus, _field(self.modulus).one)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # ------------------------------------------------------------- comparison
    def __eq__(self, other):
        if isinstance(other, (CycScalar, int, Rational)):
            a, b = self._coerce(other)
            return a.coeffs == b.coeffs
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            f = _field(self.modulus)
            self._hash = hash(sum((c * t for c, t in zip(self.coeffs, f.traces) if c), Fraction(0)))
        return self._hash

    def as_rational(self):
        """The value as an int/Fraction if it is rational, else None."""
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def reduced(self) -> CycScalar:
        """The same number written over the smallest modulus that holds it."""
        from .linalg import solve_rational

        n = self.modulus
        for d in sorted(k for k in range(1, n + 1) if n % k == 0):
            if d == n:
                return self
            g = _field(d)
            basis = [CycScalar._raw(d, g.powers[k]).lift(n).coeffs for k in range(g.phi)]
            try:
                y = solve_rational(basis, self.coeffs)
            except ValueError:  # pragma: no cover - the lifted basis is independent
                y = None
            if y is not None:
                return CycScalar(d, y)
        return self

    def root_exponent(self):
        """e with self == zeta_N^e, or None when self is not such a power."""
        f = _field(self.modulus)
        for e, p in enumerate(f.powers):
            if p == self.coeffs:
                return e
        return None

    # ---------------------------------------------------------------- output
    def to_json(self) -> dict:
        return {"modulus": self.modulus, "coeff_vector": [_json_rational(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> CycScalar:
        return cls(int(data["modulus"]), [Fraction(c) for c in data["coeff_vector"]])

    def __repr__(self):
        return f"CycScalar({self.modulus}, {self.coeffs})"

    def __str__(self):
        e = self.root_exponent()
        if e is not None:
            if e == 0:
                return "1"
            return f"z{self.modulus}" if e == 1 else f"z{self.modulus}^{e}"
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else (f"z{self.modulus}" if k == 1 else f"z{self.modulus}^{k}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{_paren(c)}*{mono}")
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")


def _paren(c):
    return f"({c})" if isinstance(c, Fraction) else str(c)


def _json_rational(c):
    return c if isinstance(c, int) else str(c)


def root_of_unity(n: int, e: int) -> CycScalar:
    """zeta_n^(e mod n)."""
    f = _field(n)
    return CycScalar._raw(n, f.powers[e % n])


def lift(values, modulus: int):
    return [v.lift(modulus) for v in values]


def multiplicative_order(s: CycScalar):
    """Least t >= 1 with s^t == 1, or ``INFINITE`` if s is not torsion."""
    if s.is_zero():
        raise ZeroArgument("multiplicative order of zero")
    # torsion units of Q(zeta_N) are the 2N-th roots of unity
    bound = 2 * s.modulus
    p = s
    for t in range(1, bound + 1):
        if p.is_one():
            return t
        p = p * s
    return INFINITE


def q_number(k: int, q: CycScalar) -> CycScalar:
    """(k)_q = 1 + q + ... + q^(k-1)."""
    total = CycScalar.from_rational(0, q.modulus)
    p = CycScalar.from_rational(1, q.modulus)
    for _ in range(k):
        total = total + p
        p = p * q
    return total


def q_factorial(n: int, q: CycScalar) -> CycScalar:
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    out = CycScalar.from_rational(1, q.modulus)
    for k in range(1, n + 1):
        out = out * q_number(k, q)
    return out


def q_binomial(n: int, k: int, q: CycScalar) -> CycScalar:
    """Gaussian binomial evaluated at q via the q-Pascal rule.

    The quotient of q-factorials is 0/0 at roots of unity, so the value is
    obtained from the polynomial identity instead.
    """
    if not 0 <= k <= n:
        raise ValueError(f"q_binomial needs 0 <= k <= n, got n={n}, k={k}")
    one = CycScalar.from_rational(1, q.modulus)
    zero = CycScalar.from_rational(0, q.modulus)
    row = [one]
    for m in range(1, n + 1):
        new = []
        for j in range(m + 1):
            left = row[j - 1] if j >= 1 else zero
            right = row[j] if j < m else zero
            new.append(left + (q ** j) * right if j < m else left)
        row = new
    return row[k]
