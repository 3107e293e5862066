"""Reidemeister simplification with a replayable move log.

The search first removes kinks (R1) and reducible bigons (R2) greedily until
none remain.  It then runs a breadth-first search over R3 slides and R2
insertions, looking for a diagram where greedy reduction gets strictly below
the current crossing count; on success the search restarts from there.  The
number of diagrams visited is bounded by ``budget``.  Candidate moves are
enumerated in a fixed order (R1, then R2, then R3, by crossing id), so the
result is a deterministic function of the input and the budget.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from knotpuzzle.diagram.pd import PDCode
from knotpuzzle.diagram.planar import Diagram, Move

__all__ = [
    "DEFAULT_BUDGET",
    "SimplifyResult",
    "greedy_reduce",
    "reidemeister_simplify",
    "replay",
]

DEFAULT_BUDGET = 10_000


@dataclass(frozen=True)
class SimplifyResult:
    pd: PDCode
    moves: tuple[Move, ...]
    states_explored: int
    budget_exhausted: bool
    start_crossings: int = 0

    @property
    def crossings(self) -> int:
        return self.pd.crossing_count

    @property
    def reached_zero(self) -> bool:
        return self.pd.crossing_count == 0


def greedy_reduce(d: Diagram, log: list[Move]) -> None:
    """Apply R1 then R2 removals (lowest site first) until neither applies."""
    while True:
        move = next(d.r1_sites(), None)
        if move is None:
            move = next(d.r2_sites(), None)
        if move is None:
            return
        d.apply(move)
        log.append(move)


@dataclass
class _Node:
    diagram: Diagram
    path: list[Move] = field(default_factory=list)


def _search(root: Diagram, budget: int, insert_slack: int) -> tuple[list[Move], Diagram, int] | int:
    """BFS for a move path after which greedy reduction lowers the crossing count.

    Returns ``(path_including_reductions, diagram, visited)`` or the visited
    count when nothing better was found.
    """
    target = len(root)
    seen = {root.canonical_key()}
    queue = deque([_Node(root, [])])
    visited = 0
    while queue and visited < budget:
        node = queue.popleft()
        d = node.diagram
        moves = list(d.r3_sites())
        if len(d) + 2 <= target + insert_slack:
            moves.extend(d.r2_insert_sites())
        for move in moves:
            nxt = d.copy()
            nxt.apply(move)
            key = nxt.canonical_key()
            if key in seen:
                continue
            seen.add(key)
            visited += 1
            trial = nxt.copy()
            log: list[Move] = []
            greedy_reduce(trial, log)
            if len(trial) < target:
                return node.path + [move] + log, trial, visited
            queue.append(_Node(nxt, node.path + [move]))
            if visited >= budget:
                break
    return visited


def reidemeister_simplify(pd: PDCode, budget: int = DEFAULT_BUDGET, insert_slack: int = 2) -> SimplifyResult:
    """Reduce crossings by Reidemeister moves; never returns more crossings than given.

    ``insert_slack`` bounds how far above the current best the search may
    climb through R2 insertions (0 disables insertions).
    """
    d = Diagram.from_pd(pd)
    moves: list[Move] = []
    greedy_reduce(d, moves)
    explored = 0
    exhausted = False
    while len(d) > 0:
        remaining = budget - explored
        if remaining <= 0:
            exhausted = True
            break
        found = _search(d, remaining, insert_slack)
        if isinstance(found, int):
            explored += found
            exhausted = explored >= budget
            break
        path, d, used = found
        explored += used
        moves.extend(path)
    return SimplifyResult(d.to_pd(), tuple(moves), explored, exhausted, pd.crossing_count)


def replay(pd: PDCode, moves: tuple[Move, ...] | list[Move]) -> PDCode:
    """Apply a move log to ``pd``; raises ValueError if any move is inapplicable."""
    d = Diagram.from_pd(pd)
    for move in moves:
        d.apply(tuple(move))
    return d.to_pd()
