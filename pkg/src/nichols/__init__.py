"""Nichols algebras of diagonal type: Weyl groupoid, roots, Lyndon PBW
basis and presentation by generators and relations, checked against the
canonical pairing."""

from __future__ import annotations

from .braided import BraidingMatrix, FreeElem, braided_commutator, hyperletter, pairing
from .cyclo import CycScalar, root_of_unity
from .oracle import gram_block, graded_dim, in_radical
from .pbw import PbwSystem, dimension, hilbert_series, order_roots
from .presentation import build_twist, coefficient, emit_presentation, solve_coefficients_oracle
from .weyl import GroupoidObject, check_convex, explore_groupoid, positive_roots

__version__ = "0.1.0"

__all__ = [
    "BraidingMatrix",
    "CycScalar",
    "FreeElem",
    "GroupoidObject",
    "PbwSystem",
    "braided_commutator",
    "build_twist",
    "check_convex",
    "coefficient",
    "dimension",
    "emit_presentation",
    "explore_groupoid",
    "graded_dim",
    "gram_block",
    "hilbert_series",
    "hyperletter",
    "in_radical",
    "order_roots",
    "pairing",
    "positive_roots",
    "root_of_unity",
    "solve_coefficients_oracle",
]
