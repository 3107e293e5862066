"""Knot and link diagrams: PD codes, braids, planar moves and simplification."""

from knotpuzzle.diagram.braid import BraidWord, braid_to_pd, parse_braid
from knotpuzzle.diagram.pd import (
    PDCode,
    components,
    crossing_signs,
    mirror,
    parse_pd,
    render_pd,
    validate,
    writhe,
)

__all__ = [
    "BraidWord",
    "PDCode",
    "braid_to_pd",
    "components",
    "crossing_signs",
    "mirror",
    "parse_braid",
    "parse_pd",
    "render_pd",
    "validate",
    "writhe",
]
