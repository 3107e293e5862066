"""Puzzles, the banded knot they determine, and the solvability verdict.

A puzzle is a wire made of two unlinked loops joined by an arc.  Thickening
the arc into a band and merging the loops along it yields a single knot.  If
the meridian could be slid off the wire it could be slid off that knot, which
is impossible unless the knot is trivial; and the knot is trivial exactly
when the arc is isotopic to a trivial arc, which is the entanglement puzzle.

Word-only input is realised by a fixed canonical embedding:

* the y-loop is a tall rectangle, the x-loop a wide flat rectangle lying
  across it, passing over it at all four crossings;
* the arc leaves the x-loop near its lower-left corner, runs along a
  corridor below both loops and ends on the y-loop near its lower-right
  corner;
* each letter of the word is a finger rising from the corridor.  An x-finger
  passes over the y-loop's lower edge on both legs and hooks the x-loop's
  lower edge; a y-finger hooks the y-loop's lower edge.  For exponent +1 the
  finger passes over the hooked edge going up and under it coming down;
* the band is the flat parallel double of the arc, with ``twists`` full
  twists (two crossings each) inserted mid-corridor; positive twists give
  positive crossings.

An arc that is knotted in a way the word cannot see has to be supplied as an
explicit diagram, or drawn by hand and banded with ``banded_knot``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from knotpuzzle.diagram.geometry import pd_from_polyline
from knotpuzzle.diagram.pd import PDCode, components, parse_pd, validate
from knotpuzzle.diagram.simplify import DEFAULT_BUDGET
from knotpuzzle.errors import InconsistentInput, ParseError, ValidationError
from knotpuzzle.freegroup import X, FreeWord, core, is_homotopically_trivial, parse_word, render_word
from knotpuzzle.invariants.obstruction import (
    HOMOTOPY_NONTRIVIAL,
    Certificate,
    Obstruction,
    certify_unknot,
    detect_nontrivial,
)

__all__ = [
    "Puzzle",
    "Verdict",
    "SOLVABLE",
    "UNSOLVABLE",
    "INCONCLUSIVE",
    "build_knot",
    "associated_knot",
    "analyze",
    "expected_crossings",
    "banded_knot",
    "parse_puzzle",
    "load_puzzle",
]

SOLVABLE = "Solvable"
UNSOLVABLE = "Unsolvable"
INCONCLUSIVE = "Inconclusive"

# Which way an x-finger hooks the x-loop for exponent +1.  Chosen so that the
# word yx yields the square knot rather than the granny knot (see tests).
X_HOOK_OVER_GOING_UP = True

# segment heights; higher passes over
_H_Y_LOOP = 10
_H_X_LOOP = 20
_H_LOW = 0
_H_MID = 15
_H_HIGH = 30
_H_TWIST_TOP = 50
_H_TWIST_BOTTOM = 40

_CORRIDOR = -12
_Y_BOTTOM = 0
_Y_TOP = 40
_X_BOTTOM = 16
_X_TOP = 24
_Y_FINGER_TOP = 8
_X_FINGER_TOP = 20
_FINGER_WIDTH = 4
_FINGER_PITCH = 8
_TWIST_PITCH = 4


@dataclass(frozen=True)
class Puzzle:
    arc_word: FreeWord
    band_twists: int = 0
    explicit_knot: PDCode | None = None

    def __post_init__(self) -> None:
        if self.explicit_knot is not None:
            validate(self.explicit_knot)
            if components(self.explicit_knot) != 1:
                raise ValidationError("explicit knot diagram must have exactly one component")


@dataclass(frozen=True)
class Verdict:
    kind: str
    obstruction: Obstruction | None = None
    certificate: Certificate | None = None
    report: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.kind == SOLVABLE and self.certificate is None:
            raise ValueError("a Solvable verdict needs a certificate")
        if self.kind == UNSOLVABLE and self.obstruction is None:
            raise ValueError("an Unsolvable verdict needs an obstruction")


def expected_crossings(word: FreeWord, twists: int) -> int:
    nx = word.count(X)
    ny = len(word) - nx
    return 4 + 8 * nx + 4 * ny + 2 * abs(twists)


def _mitre(centre: list[tuple[int, int]]) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    """Left and right parallels at distance 1 of a rectilinear path."""

    def normal(p: tuple[int, int], q: tuple[int, int]) -> tuple[int, int]:
        dx = (q[0] > p[0]) - (q[0] < p[0])
        dy = (q[1] > p[1]) - (q[1] < p[1])
        return (-dy, dx)

    left, right = [], []
    last = len(centre) - 1
    for i, v in enumerate(centre):
        ns = []
        if i > 0:
            ns.append(normal(centre[i - 1], v))
        if i < last:
            ns.append(normal(v, centre[i + 1]))
        if len(ns) == 2 and ns[0] == ns[1]:
            ns.pop()
        nx = sum(n[0] for n in ns)
        ny = sum(n[1] for n in ns)
        left.append((v[0] + nx, v[1] + ny))
        right.append((v[0] - nx, v[1] - ny))
    return left, right


def _band_strand(
    pts: list[tuple[int, int]],
    heights: list[int],
    twist_seg: int | None,
    twists: int,
    starts_high: bool,
) -> tuple[list[tuple[int, int]], list[int]]:
    """Insert the twist zigzag into one parallel of the arc."""
    if twist_seg is None:
        return pts, heights
    x0 = pts[twist_seg][0]
    out_p = pts[: twist_seg + 1]
    out_h = heights[:twist_seg]
    high = starts_high
    for j in range(2 * abs(twists)):
        going_down = high
        high = not high
        y = _CORRIDOR + (1 if high else -1)
        if j < 2 * abs(twists) - 1:
            out_p.append((x0 + (j + 1) * _TWIST_PITCH, y))
        # the strand moving down passes under for positive twists, which
        # makes both crossings of a twist carry the sign of ``twists``
        over = going_down == (twists < 0)
        out_h.append(_H_TWIST_TOP if over else _H_TWIST_BOTTOM)
    out_p.extend(pts[twist_seg + 1 :])
    out_h.extend(heights[twist_seg + 1 :])
    return out_p, out_h


def _layout(word: FreeWord, twists: int) -> tuple[list[tuple[int, int]], list[int]]:
    """Closed polyline and per-segment heights of the banded knot."""
    letters = word.letters()
    x_attach = 4
    cursor = 16
    twist_at = (len(letters) + 1) // 2 if letters else 0

    centre: list[tuple[int, int]] = [(x_attach, _X_BOTTOM), (x_attach, _CORRIDOR)]
    seg_h: list[int] = [_H_LOW]
    twist_seg: int | None = None

    def place_twists() -> None:
        nonlocal cursor, twist_seg
        centre.append((cursor, _CORRIDOR))
        seg_h.append(_H_LOW)
        twist_seg = len(centre) - 1
        cursor += 2 * abs(twists) * _TWIST_PITCH
        centre.append((cursor, _CORRIDOR))
        seg_h.append(_H_LOW)
        cursor += _FINGER_PITCH - _FINGER_WIDTH

    for idx, (gen, exp) in enumerate(letters):
        if twists and idx == twist_at:
            place_twists()
        p = cursor
        if gen is X:
            top = _X_FINGER_TOP
            up_over = (exp > 0) == X_HOOK_OVER_GOING_UP
            up_h, down_h = (_H_HIGH, _H_MID) if up_over else (_H_MID, _H_HIGH)
        else:
            top = _Y_FINGER_TOP
            up_h, down_h = (_H_HIGH, _H_LOW) if exp > 0 else (_H_LOW, _H_HIGH)
        centre.extend([(p, _CORRIDOR), (p, top), (p + _FINGER_WIDTH, top), (p + _FINGER_WIDTH, _CORRIDOR)])
        seg_h.extend([_H_LOW, up_h, _H_LOW, down_h])
        cursor += _FINGER_PITCH
    if twists and twist_seg is None:
        place_twists()
    x_ascent = cursor + 4
    centre.extend([(x_ascent, _CORRIDOR), (x_ascent, _Y_BOTTOM)])
    seg_h.extend([_H_LOW, _H_LOW])
    return _band(centre, seg_h, twist_seg, twists)


def _band(
    centre: list[tuple[int, int]], seg_h: list[int], twist_seg: int | None, twists: int
) -> tuple[list[tuple[int, int]], list[int]]:
    """Double the arc centreline and close it up through the two loops."""
    assert len(seg_h) == len(centre) - 1
    left, right = _mitre(centre)
    # left of rightward travel is the upper corridor strand
    lp, lh = _band_strand(left, seg_h, twist_seg, twists, starts_high=True)
    rp, rh = _band_strand(right, seg_h, twist_seg, twists, starts_high=False)

    x_end = centre[-1][0]
    y_left = 12
    y_right = x_end + 4
    x_right = y_right + 8
    y_corners = [(y_left, _Y_BOTTOM), (y_left, _Y_TOP), (y_right, _Y_TOP), (y_right, _Y_BOTTOM)]
    x_corners = [(0, _X_BOTTOM), (0, _X_TOP), (x_right, _X_TOP), (x_right, _X_BOTTOM)]
    points = lp + y_corners + rp[::-1] + x_corners
    heights = lh + [_H_Y_LOOP] * 5 + rh[::-1] + [_H_X_LOOP] * 5
    return points, heights


def banded_knot(centre: list[tuple[int, int]], heights: list[int]) -> PDCode:
    """Associated knot of an arc drawn by hand in the canonical frame.

    ``centre`` is a rectilinear polyline on the even integer grid from
    ``(4, 16)`` on the x-loop to ``(x, 0)`` on the y-loop with ``x > 12``,
    arriving from below; ``heights[i]`` is the height of the segment leaving
    ``centre[i]``.  The loops are the canonical rectangles (heights 20 and 10),
    sized to the end point.  Arc self-crossings become four band crossings.
    """
    if len(heights) != len(centre) - 1:
        raise ValidationError("need one height per arc segment")
    if centre[0] != (4, _X_BOTTOM):
        raise ValidationError("the arc must start at (4, 16) on the x-loop")
    (x0, y0), (x1, y1) = centre[-2], centre[-1]
    if y1 != _Y_BOTTOM or x0 != x1 or y0 >= y1 or x1 <= 12:
        raise ValidationError("the arc must end on the y-loop's lower edge, arriving from below")
    if any(v % 2 for p in centre for v in p):
        raise ValidationError("arc vertices must lie on the even grid")
    points, hs = _band(list(centre), list(heights), None, 0)
    pd = pd_from_polyline(points, hs)
    validate(pd)
    return pd


def build_knot(word: FreeWord, twists: int = 0) -> PDCode:
    """PD code of the knot obtained by banding the two loops along the arc."""
    points, heights = _layout(word, twists)
    pd = pd_from_polyline(points, heights)
    validate(pd)
    return pd


def associated_knot(p: Puzzle) -> PDCode:
    if p.explicit_knot is not None:
        return p.explicit_knot
    return build_knot(p.arc_word, p.band_twists)


def analyze(p: Puzzle, budget: int = DEFAULT_BUDGET) -> Verdict:
    """Homotopy test, then invariants of the associated knot, then a simplification search."""
    homotopy_ok = is_homotopically_trivial(p.arc_word)
    if not homotopy_ok and p.explicit_knot is None:
        return Verdict(UNSOLVABLE, obstruction=Obstruction(HOMOTOPY_NONTRIVIAL, core(p.arc_word)))

    k = associated_knot(p)
    obstruction = detect_nontrivial(k)
    if obstruction is not None:
        if not homotopy_ok:
            # both tests agree the arc is nontrivial; report the cheaper one
            return Verdict(UNSOLVABLE, obstruction=Obstruction(HOMOTOPY_NONTRIVIAL, core(p.arc_word)))
        return Verdict(UNSOLVABLE, obstruction=obstruction)

    cert = certify_unknot(k, budget)
    if not homotopy_ok:
        if cert is not None:
            raise InconsistentInput(
                f"word {render_word(p.arc_word)} is homotopically nontrivial "
                "but the explicit diagram simplifies to the unknot"
            )
        return Verdict(UNSOLVABLE, obstruction=Obstruction(HOMOTOPY_NONTRIVIAL, core(p.arc_word)))
    if cert is not None:
        return Verdict(SOLVABLE, certificate=cert)
    report = {
        "budget": budget,
        "crossings": k.crossing_count,
        "jones": "1",
        "alexander": "1",
    }
    return Verdict(INCONCLUSIVE, report=report)


def parse_puzzle(text: str, base_dir: str | os.PathLike[str] | None = None) -> Puzzle:
    """Read ``key = value`` lines; ``knot`` paths are resolved against ``base_dir``."""
    fields: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep or key not in ("word", "twists", "knot"):
            raise ParseError(f"line {lineno}: expected word/twists/knot = value, got {raw.strip()!r}")
        if key in fields:
            raise ParseError(f"line {lineno}: duplicate key {key!r}")
        fields[key] = value.strip()
    if "word" not in fields:
        raise ParseError("puzzle file has no 'word' line")
    w = parse_word(fields["word"])
    try:
        twists = int(fields.get("twists", "0"))
    except ValueError:
        raise ParseError(f"twists must be an integer, got {fields['twists']!r}") from None
    knot = None
    if "knot" in fields:
        path = Path(fields["knot"])
        if base_dir is not None and not path.is_absolute():
            path = Path(base_dir) / path
        knot = parse_pd(path.read_text())
    return Puzzle(w, twists, knot)


def load_puzzle(path: str | os.PathLike[str]) -> Puzzle:
    path = Path(path)
    return parse_puzzle(path.read_text(), base_dir=path.parent)
