import random

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from knotpuzzle.diagram import (
    BraidWord,
    PDCode,
    braid_to_pd,
    components,
    crossing_signs,
    mirror,
    parse_braid,
    parse_pd,
    render_pd,
    validate,
    writhe,
)
from knotpuzzle.diagram.braid import braid_permutation
from knotpuzzle.diagram.geometry import LayoutError, pd_from_polyline
from knotpuzzle.diagram.pd import relabel
from knotpuzzle.errors import ParseError, ValidationError
from oracles import braid_components

TREFOIL = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"

braids = st.integers(2, 4).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(st.sampled_from([i for i in range(1, n)] + [-i for i in range(1, n)]), max_size=10),
    )
)


def closure(n: int, word: list[int]) -> PDCode:
    return braid_to_pd(BraidWord(n, tuple((abs(g), 1 if g > 0 else -1) for g in word)))


# ---- PD parsing and validation


def test_parse_trefoil():
    pd = parse_pd(TREFOIL)
    assert pd.crossing_count == 3
    assert components(pd) == 1
    assert render_pd(pd) == TREFOIL


def test_parse_unknot_and_comments():
    pd = parse_pd("# a circle\nO  # trailing comment\n")
    assert pd == PDCode((), 1)
    assert components(pd) == 1
    assert components(parse_pd("O O")) == 2


@pytest.mark.parametrize("bad", ["X(1,2,3)", "X(1,2,3,4,5)", "X(1,a,2,3)", "Y(1,2,3,4)", "X(0,1,1,0)", "Oops"])
def test_parse_syntax_errors(bad):
    with pytest.raises(ParseError):
        parse_pd(bad)


@pytest.mark.parametrize(
    "bad, label",
    [
        ("X(1,4,2,5) X(3,6,4,1) X(5,2,6,7)", "3"),  # 3 once, 7 once
        ("X(1,1,1,1)", "1"),
        ("X(1,4,2,5) X(3,6,4,1) X(5,2,6,9)", "3"),
    ],
)
def test_parse_validation_errors_name_label(bad, label):
    with pytest.raises(ValidationError, match=label):
        parse_pd(bad)


def test_empty_diagram_rejected():
    with pytest.raises(ValidationError):
        parse_pd("   # nothing\n")


def test_nonplanar_rejected():
    # consistent labels and orientation, but the gluing is not planar
    pd = PDCode(((1, 5, 2, 4), (3, 6, 4, 1), (5, 2, 6, 3)), 0)
    with pytest.raises(ValidationError, match="not planar"):
        validate(pd)


def test_relabel_preserves_everything():
    pd = parse_pd(TREFOIL)
    shifted = relabel(pd, {v: v + 10 for v in pd.labels()})
    assert writhe(shifted) == writhe(pd)
    assert components(shifted) == 1


# ---- signs and mirror


def test_trefoil_signs():
    assert crossing_signs(parse_pd(TREFOIL)) == [-1, -1, -1]
    right = braid_to_pd(parse_braid("1 1 1"))
    assert writhe(right) == 3
    assert writhe(mirror(right)) == -3
    assert writhe(PDCode((), 1)) == 0


@given(braids)
def test_writhe_is_exponent_sum(b):
    n, word = b
    pd = closure(n, word)
    validate(pd)
    assert writhe(pd) == sum(1 if g > 0 else -1 for g in word)
    assert components(pd) == braid_components(word, n)


@given(braids)
def test_mirror_is_involution_and_negates_signs(b):
    # restricted to knots: a two-edge link component has no label-determined orientation
    pd = closure(*b)
    assume(components(pd) == 1)
    m = mirror(pd)
    validate(m)
    assert crossing_signs(m) == [-s for s in crossing_signs(pd)]
    assert mirror(m) == pd


# ---- braids


def test_braid_examples():
    kink = braid_to_pd(parse_braid("1"))
    assert kink.crossing_count == 1 and components(kink) == 1
    tre = braid_to_pd(parse_braid("1 1 1"))
    assert tre.crossing_count == 3 and components(tre) == 1
    assert braid_to_pd(BraidWord(1, ())) == PDCode((), 1)
    assert components(braid_to_pd(BraidWord(2, ()))) == 2
    assert braid_to_pd(parse_braid("1", strands=3)).free_loops == 1


def test_braid_parse_errors():
    with pytest.raises(ParseError):
        parse_braid("1 a")
    with pytest.raises(ParseError):
        parse_braid("0")
    with pytest.raises(ValidationError):
        parse_braid("3", strands=2)


def test_braid_permutation():
    assert braid_permutation(parse_braid("1 2")) == [1, 2, 0]


# ---- polyline geometry


def test_polyline_without_crossings_is_unknot():
    assert pd_from_polyline([(0, 0), (2, 0), (2, 2), (0, 2)], [0, 0, 0, 0]) == PDCode((), 1)


def test_polyline_figure_eight_curve_is_a_kink():
    pts = [(0, 0), (2, 2), (2, 0), (0, 2)]
    pd = pd_from_polyline(pts, [1, 0, 0, 0])
    assert pd.crossing_count == 1 and components(pd) == 1
    assert abs(writhe(pd)) == 1


def test_polyline_orientation_sign():
    # the same curve with the over/under choice swapped has the opposite sign
    pts = [(0, 0), (2, 2), (2, 0), (0, 2)]
    a = pd_from_polyline(pts, [1, 0, 0, 0])
    b = pd_from_polyline(pts, [0, 0, 1, 0])
    assert writhe(a) == -writhe(b)


def test_polyline_degenerate_layouts():
    with pytest.raises(LayoutError):
        pd_from_polyline([(0, 0), (2, 2), (2, 0), (0, 2)], [0, 0, 0, 0])  # equal heights
    with pytest.raises(LayoutError):
        pd_from_polyline([(0, 0), (4, 0), (4, 2), (2, 0), (2, -2)], [0, 1, 2, 3, 4])  # touching
    with pytest.raises(LayoutError):
        pd_from_polyline([(0, 0), (1, 0)], [0, 0])


def test_polyline_matches_braid_trefoil():
    # three-lobed trefoil drawn by hand; compare writhe and crossing count with the braid
    rng = random.Random(0)
    pts = [(0, 0), (6, 0), (6, 4), (2, 4), (2, 2), (8, 2), (8, 6), (4, 6), (4, -2), (0, -2)]
    n = len(pts)
    for _ in range(5):
        heights = [rng.random() for _ in range(n)]
        try:
            pd = pd_from_polyline(pts, heights)
        except LayoutError:
            continue
        validate(pd)
        assert components(pd) == 1
