"""Exact verification toolkit for generalized cluster structures built from
periodic staircase matrices."""

from .arith import GF, QQ, PRIME, Fp, LocalRing, NotDivisible, Poly, PolyRing, exact_div
from .matrix import RingMatrix, det, trailing_minors
from .report import Report

__all__ = [
    "GF", "QQ", "PRIME", "Fp", "LocalRing", "NotDivisible", "Poly", "PolyRing", "exact_div",
    "RingMatrix", "det", "trailing_minors", "Report",
]
