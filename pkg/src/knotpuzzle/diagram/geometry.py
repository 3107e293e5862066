"""PD codes from closed polygonal curves drawn on an integer grid.

Every segment of the curve carries a height; where two segments cross, the
higher one passes over.  Coordinates are exact (integers or Fractions), so
crossing detection has no tolerance to tune: touching at a vertex or running
along another segment is reported as a layout error.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from knotpuzzle.diagram.pd import PDCode

__all__ = ["pd_from_polyline", "LayoutError"]

Point = tuple[int, int]


class LayoutError(ValueError):
    """The polyline is not a generic knot projection."""


def _cross(ax: Fraction, ay: Fraction, bx: Fraction, by: Fraction) -> Fraction:
    return ax * by - ay * bx


def _intersect(p: Point, q: Point, r: Point, s: Point) -> tuple[Fraction, Fraction] | None:
    """Parameters (t, u) of a proper crossing of pq and rs, else None."""
    dx1, dy1 = q[0] - p[0], q[1] - p[1]
    dx2, dy2 = s[0] - r[0], s[1] - r[1]
    den = _cross(dx1, dy1, dx2, dy2)
    ex, ey = r[0] - p[0], r[1] - p[1]
    if den == 0:
        if _cross(ex, ey, dx1, dy1) == 0:
            # collinear: any overlap is degenerate
            length = dx1 * dx1 + dy1 * dy1
            t0 = Fraction(ex * dx1 + ey * dy1, length)
            t1 = Fraction((s[0] - p[0]) * dx1 + (s[1] - p[1]) * dy1, length)
            lo, hi = min(t0, t1), max(t0, t1)
            if hi >= 0 and lo <= 1:
                raise LayoutError(f"segments {p}-{q} and {r}-{s} overlap")
        return None
    t = Fraction(_cross(ex, ey, dx2, dy2), den)
    u = Fraction(_cross(ex, ey, dx1, dy1), den)
    if 0 < t < 1 and 0 < u < 1:
        return t, u
    if 0 <= t <= 1 and 0 <= u <= 1:
        raise LayoutError(f"segments {p}-{q} and {r}-{s} touch at an endpoint")
    return None


def pd_from_polyline(points: Sequence[Point], heights: Sequence[float]) -> PDCode:
    """Trace the closed curve ``points[0] -> points[1] -> ... -> points[0]``.

    ``heights[i]`` belongs to the segment leaving ``points[i]``.  Edge labels
    follow the direction of travel starting after the first crossing met.
    """
    n = len(points)
    if n < 3 or len(heights) != n:
        raise LayoutError("need at least three points and one height per segment")
    segs = [(points[i], points[(i + 1) % n]) for i in range(n)]
    hits: dict[int, list[tuple[Fraction, int]]] = {i: [] for i in range(n)}
    crossings: list[tuple[int, int]] = []
    for i in range(n):
        for j in range(i + 1, n):
            if j == i + 1 or (i == 0 and j == n - 1):
                continue
            found = _intersect(*segs[i], *segs[j])
            if found is None:
                continue
            if heights[i] == heights[j]:
                raise LayoutError(f"segments {i} and {j} cross at equal height")
            k = len(crossings)
            crossings.append((i, j))
            hits[i].append((found[0], k))
            hits[j].append((found[1], k))
    if not crossings:
        return PDCode((), 1)

    visits: list[tuple[int, int]] = []  # (crossing, segment)
    for i in range(n):
        for _, k in sorted(hits[i]):
            visits.append((k, i))
    m = len(visits)
    in_label: dict[tuple[int, int], int] = {}
    out_label: dict[tuple[int, int], int] = {}
    for idx, (k, seg) in enumerate(visits):
        in_label[(k, seg)] = idx if idx > 0 else m
        out_label[(k, seg)] = idx + 1

    out = []
    for k, (i, j) in enumerate(crossings):
        under, over = (i, j) if heights[i] < heights[j] else (j, i)
        (p, q), (r, s) = segs[under], segs[over]
        ux, uy = q[0] - p[0], q[1] - p[1]
        vx, vy = s[0] - r[0], s[1] - r[1]
        a, c = in_label[(k, under)], out_label[(k, under)]
        b_in, b_out = in_label[(k, over)], out_label[(k, over)]
        if ux * vy - uy * vx > 0:
            out.append((a, b_in, c, b_out))
        else:
            out.append((a, b_out, c, b_in))
    return PDCode(tuple(out), 0)
