"""Wirtinger presentations, Fox calculus and the Alexander polynomial."""

from __future__ import annotations

from dataclasses import dataclass

from knotpuzzle.diagram.pd import PDCode, crossing_signs, orient, validate
from knotpuzzle.errors import InternalInvariantViolation, NotAKnot
from knotpuzzle.invariants.determinant import determinant
from knotpuzzle.polynomial import ONE, ZERO, LaurentPoly, normalize_alexander, t_poly

__all__ = [
    "WirtingerPresentation",
    "wirtinger",
    "fox_derivative",
    "alexander_matrix",
    "alexander",
]

Letter = tuple[int, int]  # (generator index, +1 | -1)


@dataclass(frozen=True)
class Relation:
    """``x_out = x_over^sign * x_in * x_over^-sign`` at one crossing."""

    out: int
    over: int
    inc: int
    sign: int

    def relator(self) -> tuple[Letter, ...]:
        e = self.sign
        return ((self.over, e), (self.inc, 1), (self.over, -e), (self.out, -1))


@dataclass(frozen=True)
class WirtingerPresentation:
    generator_count: int
    relations: tuple[Relation, ...]

    def relators(self) -> list[tuple[Letter, ...]]:
        return [r.relator() for r in self.relations]


def wirtinger(pd: PDCode) -> WirtingerPresentation:
    """One generator per arc, one relation per crossing."""
    o = validate(pd)
    if len(o.label_components) + pd.free_loops != 1:
        raise NotAKnot("Wirtinger presentation is built for knot diagrams only")
    if not pd.crossings:
        raise NotAKnot("a crossingless diagram has no arcs to present")
    signs = crossing_signs(pd)
    # arcs: labels glued across over-passes
    parent = {v: v for v in pd.labels()}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for _, b, _, d in pd.crossings:
        parent[find(b)] = find(d)
    roots = sorted({find(v) for v in parent})
    arc = {r: i for i, r in enumerate(roots)}
    rels = tuple(
        Relation(out=arc[find(c)], over=arc[find(b)], inc=arc[find(a)], sign=s)
        for (a, b, c, _), s in zip(pd.crossings, signs)
    )
    return WirtingerPresentation(len(roots), rels)


def fox_derivative(word: tuple[Letter, ...], gen: int) -> LaurentPoly:
    """Abelianised Fox derivative: every generator is sent to ``t``."""
    total = ZERO
    prefix = 0  # exponent sum of the prefix, i.e. its image t^prefix
    for g, e in word:
        if g == gen:
            if e > 0:
                total = total + t_poly({prefix: 1})
            else:
                total = total - t_poly({prefix - 1: 1})
        prefix += e
    return total


def alexander_matrix(p: WirtingerPresentation) -> list[list[LaurentPoly]]:
    return [[fox_derivative(r, j) for j in range(p.generator_count)] for r in p.relators()]


def alexander(pd: PDCode, method: str = "cofactor") -> LaurentPoly:
    """Normalised Alexander polynomial of a knot diagram."""
    o = orient(pd)
    if len(o.label_components) + pd.free_loops != 1:
        raise NotAKnot("Alexander polynomial is computed for knots only")
    if not pd.crossings:
        return ONE
    m = alexander_matrix(wirtinger(pd))
    minor = [row[:-1] for row in m[:-1]]
    d = determinant(minor, method=method)
    if d.is_zero():
        raise InternalInvariantViolation("Alexander minor vanished on a knot diagram")
    return normalize_alexander(d)
