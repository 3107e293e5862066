"""Evidence for and against triviality of a knot diagram.

An obstruction is a non-unit invariant (or, for puzzles, a nontrivial word
core).  A certificate is a Reidemeister move log that replays to a
crossingless diagram.  Neither test is complete: a diagram can have trivial
Jones and Alexander polynomials and still resist simplification within a
budget.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from knotpuzzle.diagram.pd import PDCode
from knotpuzzle.diagram.planar import Move
from knotpuzzle.diagram.simplify import DEFAULT_BUDGET, reidemeister_simplify, replay
from knotpuzzle.freegroup import FreeWord
from knotpuzzle.invariants.alexander import alexander
from knotpuzzle.invariants.bracket import jones
from knotpuzzle.polynomial import LaurentPoly

__all__ = [
    "JONES_NONTRIVIAL",
    "ALEXANDER_NONTRIVIAL",
    "HOMOTOPY_NONTRIVIAL",
    "Obstruction",
    "Certificate",
    "detect_nontrivial",
    "certify_unknot",
]

JONES_NONTRIVIAL = "JonesNontrivial"
ALEXANDER_NONTRIVIAL = "AlexanderNontrivial"
HOMOTOPY_NONTRIVIAL = "HomotopyNontrivial"

_KINDS = (JONES_NONTRIVIAL, ALEXANDER_NONTRIVIAL, HOMOTOPY_NONTRIVIAL)


@dataclass(frozen=True)
class Obstruction:
    kind: str
    witness: Union[LaurentPoly, FreeWord]

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ValueError(f"unknown obstruction kind {self.kind!r}")
        if isinstance(self.witness, LaurentPoly):
            if self.witness.is_one():
                raise ValueError("a polynomial witness must differ from 1")
        elif self.witness.is_identity():
            raise ValueError("a word witness must be nontrivial")


@dataclass(frozen=True)
class Certificate:
    """Moves taking ``start`` to a crossingless diagram."""

    start: PDCode
    moves: tuple[Move, ...]
    states_explored: int = 0

    def replay(self) -> PDCode:
        return replay(self.start, self.moves)

    def verify(self) -> bool:
        try:
            end = self.replay()
        except ValueError:
            return False
        return end.crossing_count == 0

    def __len__(self) -> int:
        return len(self.moves)


def detect_nontrivial(pd: PDCode) -> Obstruction | None:
    """Jones first, then Alexander; ``None`` when both are trivial."""
    v = jones(pd)
    if not v.is_one():
        return Obstruction(JONES_NONTRIVIAL, v)
    d = alexander(pd)
    if not d.is_one():
        return Obstruction(ALEXANDER_NONTRIVIAL, d)
    return None


def certify_unknot(pd: PDCode, budget: int = DEFAULT_BUDGET) -> Certificate | None:
    result = reidemeister_simplify(pd, budget=budget)
    if not result.reached_zero:
        return None
    return Certificate(pd, result.moves, result.states_explored)
