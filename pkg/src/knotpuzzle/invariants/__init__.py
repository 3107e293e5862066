"""Exact knot invariants and the knottedness obstruction."""

from knotpuzzle.invariants.alexander import alexander, wirtinger
from knotpuzzle.invariants.bracket import BACKEND, kauffman_bracket, jones
from knotpuzzle.invariants.obstruction import (
    Certificate,
    Obstruction,
    certify_unknot,
    detect_nontrivial,
)

__all__ = [
    "BACKEND",
    "Certificate",
    "Obstruction",
    "alexander",
    "certify_unknot",
    "detect_nontrivial",
    "jones",
    "kauffman_bracket",
    "wirtinger",
]
