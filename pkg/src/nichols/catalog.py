"""Named braidings used by the tests, the scripts and the README."""

from __future__ import annotations

from .braided import BraidingMatrix

# chain q -- (-1) -- r, q = r = zeta_3, edges q^-1 and r^-1 put on q_12, q_23
EX1 = BraidingMatrix(6, ((2, 4, 0), (0, 3, 4), (0, 0, 2)))
# triangle with vertices -1 and edges zeta_3, labels on q_ij with i < j
EX2 = BraidingMatrix(6, ((3, 2, 2), (0, 3, 2), (0, 0, 3)))
# the same triangle with q_ij = q_ji = zeta_6
EX2_SYMMETRIC = BraidingMatrix(6, ((3, 1, 1), (1, 3, 1), (1, 1, 3)))
# Cartan A2 at zeta_3: q_ii = zeta_3, q_12 q_21 = zeta_3^-1
A2 = BraidingMatrix(3, ((1, 2), (0, 1)))
# A1 x A1 with q_ii = -1
A1XA1 = BraidingMatrix(4, ((2, 1), (3, 2)))
# q_11 = q_22 = -1, q_12 q_21 = zeta_3
RANK2_SUPER = BraidingMatrix(6, ((3, 2), (0, 3)))
RANK1_I = BraidingMatrix(4, ((1,),))

TEST_SET = {
    "ex1": EX1,
    "ex2": EX2,
    "a2": A2,
    "a1xa1": A1XA1,
    "rank2_super": RANK2_SUPER,
}


def symmetrized(b: BraidingMatrix) -> BraidingMatrix:
    """Symmetric matrix twist-equivalent to ``b`` (modulus 2N)."""
    n = b.modulus
    e = b.exponents
    t = b.rank
    rows = tuple(
        tuple(2 * e[i][i] if i == j else (e[i][j] + e[j][i]) % n for j in range(t)) for i in range(t)
    )
    return BraidingMatrix(2 * n, rows)
