"""Planar-diagram (PD) codes.

Each crossing is a 4-tuple of edge labels listed counterclockwise, starting
at the incoming under-strand.  Labels run consecutively along every link
component in the direction of travel, wrapping from the component's largest
label back to its smallest.  Crossingless circles cannot be written as
tuples, so they are carried as a separate ``free_loops`` counter.

Crossing signs follow the usual convention: in ``X(a, b, c, d)`` the
over-strand runs either ``b -> d`` (negative crossing) or ``d -> b``
(positive crossing).
"""

from __future__ import annotations

import re
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable

from knotpuzzle.errors import ParseError, ValidationError

__all__ = [
    "PDCode",
    "parse_pd",
    "render_pd",
    "validate",
    "orient",
    "Orientation",
    "components",
    "crossing_signs",
    "writhe",
    "mirror",
    "relabel",
]

Crossing = tuple[int, int, int, int]


@dataclass(frozen=True)
class PDCode:
    crossings: tuple[Crossing, ...] = ()
    free_loops: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "crossings", tuple(tuple(int(v) for v in x) for x in self.crossings))
        if self.free_loops < 0:
            raise ValidationError("free_loops must be nonnegative")

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    def labels(self) -> list[int]:
        return sorted({v for x in self.crossings for v in x})

    def __str__(self) -> str:
        return render_pd(self)


@dataclass(frozen=True)
class Orientation:
    """Direction of travel through every crossing of a validated PD code.

    ``over_forward[i]`` is True when the over-strand of crossing ``i`` runs
    from slot 1 to slot 3.  ``label_components`` groups labels by link
    component, in traversal order.
    """

    over_forward: tuple[bool, ...]
    label_components: tuple[tuple[int, ...], ...] = field(default=())


_CROSSING_RE = re.compile(r"X\s*\(([^()]*)\)")


def parse_pd(text: str) -> PDCode:
    """Parse ``X(a,b,c,d)`` / ``O`` items; ``#`` starts a comment."""
    body = "\n".join(line.split("#", 1)[0] for line in text.splitlines())
    crossings: list[Crossing] = []
    free = 0
    pos = 0
    n = len(body)
    while pos < n:
        if body[pos].isspace():
            pos += 1
            continue
        if body[pos] == "O":
            end = pos + 1
            if end < n and not body[end].isspace():
                raise ParseError(f"unexpected text after 'O': {body[pos:pos + 12]!r}")
            free += 1
            pos = end
            continue
        if body[pos] != "X":
            raise ParseError(f"unexpected token {body[pos:pos + 12].split()[0]!r}")
        m = _CROSSING_RE.match(body, pos)
        if not m:
            raise ParseError(f"malformed crossing near {body[pos:pos + 20]!r}")
        fields = [f.strip() for f in m.group(1).split(",")]
        if len(fields) != 4:
            raise ParseError(f"crossing {m.group(0)!r} has {len(fields)} labels, expected 4")
        try:
            labels = tuple(int(f) for f in fields)
        except ValueError:
            raise ParseError(f"non-integer label in {m.group(0)!r}") from None
        if any(v <= 0 for v in labels):
            raise ParseError(f"labels must be positive integers in {m.group(0)!r}")
        crossings.append(labels)  # type: ignore[arg-type]
        pos = m.end()
    pd = PDCode(tuple(crossings), free)
    if not crossings and not free:
        raise ValidationError("empty diagram")
    validate(pd)
    return pd


def render_pd(pd: PDCode) -> str:
    items = [f"X({a},{b},{c},{d})" for a, b, c, d in pd.crossings]
    items.extend(["O"] * pd.free_loops)
    return " ".join(items)


def _occurrences(pd: PDCode) -> dict[int, list[tuple[int, int]]]:
    occ: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for i, x in enumerate(pd.crossings):
        for s, v in enumerate(x):
            occ[v].append((i, s))
    return occ


def orient(pd: PDCode) -> Orientation:
    """Check label bookkeeping and recover strand directions.

    Raises ValidationError naming the offending label.
    """
    occ = _occurrences(pd)
    for label, places in sorted(occ.items()):
        if len(places) != 2:
            raise ValidationError(f"label {label} appears {len(places)} times, expected exactly 2")

    # strand passes: each crossing has an under pass (slots 0,2) and an over pass (1,3)
    adj: dict[int, list[int]] = defaultdict(list)
    for a, b, c, d in pd.crossings:
        adj[a].append(c)
        adj[c].append(a)
        adj[b].append(d)
        adj[d].append(b)
    seen: set[int] = set()
    comps: list[tuple[int, ...]] = []
    for start in sorted(occ):
        if start in seen:
            continue
        stack = [start]
        comp = []
        seen.add(start)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(tuple(sorted(comp)))

    succ: dict[int, int] = {}
    for comp in comps:
        lo, hi = comp[0], comp[-1]
        if hi - lo + 1 != len(comp):
            missing = next(v for v in range(lo, hi + 1) if v not in comp)
            raise ValidationError(
                f"component labels {lo}..{hi} are not consecutive: label {missing} belongs elsewhere"
            )
        for v in comp:
            succ[v] = v + 1 if v < hi else lo

    for a, b, c, d in pd.crossings:
        if succ[a] != c:
            raise ValidationError(f"under-strand {a}->{c} breaks consecutive numbering at label {a}")
        if succ[b] != d and succ[d] != b:
            raise ValidationError(f"over-strand ({b},{d}) breaks consecutive numbering at label {b}")

    # Two-edge components are ambiguous from labels alone; resolve by flow balance.
    over_forward: list[bool | None] = []
    incoming: dict[int, int] = defaultdict(int)
    for a, b, c, d in pd.crossings:
        incoming[a] += 1
        fwd = succ[b] == d
        bwd = succ[d] == b
        if fwd and not bwd:
            over_forward.append(True)
            incoming[b] += 1
        elif bwd and not fwd:
            over_forward.append(False)
            incoming[d] += 1
        else:
            over_forward.append(None)
    for i, (a, b, c, d) in enumerate(pd.crossings):
        if over_forward[i] is None:
            if incoming[b] == 0:
                over_forward[i] = True
                incoming[b] += 1
            else:
                over_forward[i] = False
                incoming[d] += 1
    for label in occ:
        if incoming[label] != 1:
            raise ValidationError(f"label {label} enters {incoming[label]} crossings, expected 1")

    return Orientation(tuple(bool(f) for f in over_forward), tuple(comps))


def _face_count_ok(pd: PDCode) -> None:
    occ = _occurrences(pd)
    other: dict[tuple[int, int], tuple[int, int]] = {}
    for places in occ.values():
        p, q = places
        other[p] = q
        other[q] = p
    # connected components of the crossing graph
    parent = list(range(len(pd.crossings)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for p, q in other.items():
        ri, rj = find(p[0]), find(q[0])
        if ri != rj:
            parent[ri] = rj
    faces: dict[int, int] = defaultdict(int)
    seen: set[tuple[int, int]] = set()
    for i in range(len(pd.crossings)):
        for s in range(4):
            dart = (i, s)
            if dart in seen:
                continue
            faces[find(i)] += 1
            while dart not in seen:
                seen.add(dart)
                j, t = other[dart]
                dart = (j, (t - 1) % 4)
    size: dict[int, int] = defaultdict(int)
    for i in range(len(pd.crossings)):
        size[find(i)] += 1
    for root, v in size.items():
        if v - 2 * v + faces[root] != 2:
            label = pd.crossings[root][0]
            raise ValidationError(
                f"diagram is not planar: Euler characteristic {v - 2 * v + faces[root]} "
                f"on the piece containing label {label}"
            )


def validate(pd: PDCode) -> Orientation:
    """Run every PD invariant check; returns the recovered orientation."""
    orientation = orient(pd)
    _face_count_ok(pd)
    return orientation


def components(pd: PDCode) -> int:
    return len(orient(pd).label_components) + pd.free_loops


def crossing_signs(pd: PDCode) -> list[int]:
    o = orient(pd)
    return [-1 if fwd else 1 for fwd in o.over_forward]


def writhe(pd: PDCode) -> int:
    return sum(crossing_signs(pd))


def mirror(pd: PDCode) -> PDCode:
    """Switch every crossing by rotating its tuple one place."""
    o = orient(pd)
    out = []
    for (a, b, c, d), fwd in zip(pd.crossings, o.over_forward):
        out.append((b, c, d, a) if fwd else (d, a, b, c))
    return PDCode(tuple(out), pd.free_loops)


def relabel(pd: PDCode, mapping: dict[int, int] | Iterable[tuple[int, int]]) -> PDCode:
    m = dict(mapping)
    return PDCode(tuple(tuple(m[v] for v in x) for x in pd.crossings), pd.free_loops)  # type: ignore[misc]
