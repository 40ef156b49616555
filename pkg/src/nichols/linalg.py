"""Exact linear algebra over Q and over Q(zeta_N).

A matrix over Q(zeta_N) is handled through its realification: a scalar a
becomes the phi(N) x phi(N) rational block of multiplication by a, so ranks
over the field are the rational ranks divided by phi(N).  Rational rows are
scaled to integers and reduced by fraction-free (Bareiss) elimination.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .cyclo import CycScalar, _field


def _integral(row) -> list:
    """Scale a rational row to a primitive integer row."""
    den = 1
    for x in row:
        if isinstance(x, Fraction) and x.denominator != 1:
            den = math.lcm(den, x.denominator)
    ints = [int(x * den) for x in row] if den != 1 else [int(x) for x in row]
    g = 0
    for x in ints:
        if x:
            g = math.gcd(g, x)
            if g == 1:
                break
    if g > 1:
        ints = [x // g for x in ints]
    return ints


def bareiss_echelon(rows, limit: int | None = None) -> list:
    """Fraction-free row echelon form of an integer matrix.

    Returns the nonzero pivot rows (primitive); their number is the rank.
    Stops early once ``limit`` pivots have been found.
    """
    work = [list(r) for r in rows if any(r)]
    if not work:
        return []
    ncols = len(work[0])
    prev = 1
    out = []
    for c in range(ncols):
        if not work:
            break
        p = next((k for k, r in enumerate(work) if r[c]), None)
        if p is None:
            continue
        pivot = work.pop(p)
        pv = pivot[c]
        nxt = []
        for r in work:
            a = r[c]
            if a:
                new = [(pv * x - a * y) // prev for x, y in zip(r, pivot)]
            else:
                new = [(pv * x) // prev for x in r]
            if any(new):
                nxt.append(new)
        out.append(pivot)
        work = nxt
        prev = pv
        if limit is not None and len(out) >= limit:
            break
    return [_integral(r) for r in out]


def rank_int(rows) -> int:
    return len(bareiss_echelon(rows))


def realify_rows(matrix, modulus: int) -> list:
    """Integer rows spanning, over Q, the field row space of ``matrix``.

    Row r of the input contributes the rows zeta^k * r, k < phi(N), written
    in the power basis coordinate by coordinate.
    """
    phi = _field(modulus).phi
    out = []
    for row in matrix:
        lifted = [_as_scalar(x, modulus) for x in row]
        for k in range(phi):
            flat = []
            for x in lifted:
                flat.extend(x.times_root(k).coeffs if k else x.coeffs)
            out.append(_integral(flat))
    return out


def _as_scalar(x, modulus: int) -> CycScalar:
    if isinstance(x, CycScalar):
        return x if x.modulus == modulus else x.lift(modulus)
    return CycScalar.from_rational(x, modulus)


def rank_field(matrix, modulus: int) -> int:
    """Rank over Q(zeta_modulus) of a matrix of scalars."""
    if not matrix or not matrix[0]:
        return 0
    phi = _field(modulus).phi
    r = rank_int(realify_rows(matrix, modulus))
    assert r % phi == 0
    return r // phi


def solve_rational(columns, rhs) -> list | None:
    """Unique x with sum_k x_k columns[k] = rhs over Q, or None.

    Raises ValueError when the solution is not unique.
    """
    n = len(columns)
    m = len(rhs)
    rows = [[Fraction(columns[k][i]) for k in range(n)] + [Fraction(rhs[i])] for i in range(m)]
    piv_cols = []
    r = 0
    for c in range(n):
        p = next((k for k in range(r, m) if rows[k][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pv = rows[r][c]
        rows[r] = [v / pv for v in rows[r]]
        for k in range(m):
            if k != r and rows[k][c]:
                f = rows[k][c]
                rows[k] = [v - f * w for v, w in zip(rows[k], rows[r])]
        piv_cols.append(c)
        r += 1
    if any(rows[k][n] for k in range(r, m)):
        return None
    if r < n:
        raise ValueError("linear system has more than one solution")
    x = [Fraction(0)] * n
    for k, c in enumerate(piv_cols):
        x[c] = rows[k][n]
    return x


def solve_field(columns, rhs, modulus: int) -> list | None:
    """Unique scalars c_k with sum_k c_k columns[k] = rhs over Q(zeta_N).

    ``columns`` and ``rhs`` are equal-length lists of scalars.  Returns None
    when the system is inconsistent; raises ValueError if not unique.
    """
    phi = _field(modulus).phi
    m = len(rhs)
    # unknown c_k = sum_l y_{k,l} zeta^l; column (k, l) is zeta^l * columns[k]
    real_cols = []
    for col in columns:
        lifted = [_as_scalar(x, modulus) for x in col]
        for l in range(phi):
            flat = []
            for x in lifted:
                flat.extend(x.times_root(l).coeffs if l else x.coeffs)
            real_cols.append(flat)
    real_rhs = []
    for x in rhs:
        real_rhs.extend(_as_scalar(x, modulus).coeffs)
    if not columns:
        return [] if not any(real_rhs) else None
    y = solve_rational(real_cols, real_rhs) if m else [Fraction(0)] * (len(columns) * phi)
    if y is None:
        return None
    return [CycScalar(modulus, y[k * phi:(k + 1) * phi]) for k in range(len(columns))]
