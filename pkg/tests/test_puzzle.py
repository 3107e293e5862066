import random

import pytest
import sympy as sp

from knotpuzzle.diagram import PDCode, components, parse_pd, validate, writhe
from knotpuzzle.errors import InconsistentInput, ParseError, ValidationError
from knotpuzzle.freegroup import IDENTITY, parse_word
from knotpuzzle.invariants import certify_unknot, jones
from knotpuzzle.puzzle import (
    INCONCLUSIVE,
    SOLVABLE,
    UNSOLVABLE,
    Puzzle,
    Verdict,
    analyze,
    associated_knot,
    build_knot,
    expected_crossings,
    parse_puzzle,
)
from oracles import granny_knot_jones, square_knot_jones, to_sympy

TREFOIL = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)")
KINK = parse_pd("X(1,1,2,2)")


def random_word(rng: random.Random, max_len: int = 6) -> str:
    return "".join(rng.choice("xyXY") for _ in range(rng.randint(0, max_len)))


def test_identity_band_is_certified_unknot():
    pd = build_knot(IDENTITY, 0)
    assert pd.crossing_count == 4
    assert certify_unknot(pd) is not None


def test_entanglement_knot_is_certified_unknot():
    cert = certify_unknot(build_knot(parse_word("xy"), 0))
    assert cert is not None and cert.verify()


def test_coffin_is_square_knot_not_granny():
    # calibration of the x-hook chirality: yx must give trefoil # mirror trefoil
    v = to_sympy(jones(build_knot(parse_word("yx"), 0)))
    assert sp.expand(v - square_knot_jones()) == 0
    assert sp.expand(v - granny_knot_jones()) != 0


def test_twists_do_not_change_trivial_bands():
    for twists in (-2, -1, 1, 3):
        pd = build_knot(IDENTITY, twists)
        assert pd.crossing_count == 2 * abs(twists) + 4
        assert jones(pd).is_one()


def test_twist_crossings_carry_the_sign_of_twists():
    base = writhe(build_knot(IDENTITY, 0))
    for twists in range(-3, 4):
        assert writhe(build_knot(IDENTITY, twists)) - base == 2 * twists


def test_crossing_formula_and_validity_on_random_words():
    rng = random.Random(17)
    for _ in range(60):
        w = parse_word(random_word(rng))
        twists = rng.randint(-3, 3)
        pd = build_knot(w, twists)
        validate(pd)
        assert components(pd) == 1
        assert pd.crossing_count == expected_crossings(w, twists)


def test_build_is_deterministic():
    w = parse_word("yXy")
    assert build_knot(w, 1) == build_knot(w, 1)


def test_puzzle_rejects_links():
    with pytest.raises(ValidationError):
        Puzzle(parse_word("xy"), 0, PDCode((), 2))


def test_verdict_invariants():
    with pytest.raises(ValueError):
        Verdict(SOLVABLE)
    with pytest.raises(ValueError):
        Verdict(UNSOLVABLE)


def test_associated_knot():
    p = Puzzle(parse_word("xy"), 0, TREFOIL)
    assert associated_knot(p) is TREFOIL
    assert associated_knot(Puzzle(parse_word("yx"))) == build_knot(parse_word("yx"), 0)
    assert components(associated_knot(Puzzle(parse_word("yxyx")))) == 1


def test_analyze_verdicts():
    v = analyze(Puzzle(parse_word("xy")))
    assert v.kind == SOLVABLE and v.certificate.verify()
    v = analyze(Puzzle(parse_word("yx")))
    assert v.kind == UNSOLVABLE and v.obstruction.kind == "HomotopyNontrivial"
    assert v.obstruction.witness == parse_word("yx")
    v = analyze(Puzzle(parse_word("yxyx")))
    assert v.obstruction.witness == parse_word("yxyx")


def test_analyze_explicit_knot():
    v = analyze(Puzzle(parse_word("xy"), 0, TREFOIL))
    assert v.kind == UNSOLVABLE and v.obstruction.kind == "JonesNontrivial"
    v = analyze(Puzzle(parse_word("xy"), 0, KINK))
    assert v.kind == SOLVABLE
    with pytest.raises(InconsistentInput):
        analyze(Puzzle(parse_word("yx"), 0, KINK))
    # a homotopy obstruction that agrees with a knotted explicit diagram is fine
    assert analyze(Puzzle(parse_word("yx"), 0, TREFOIL)).kind == UNSOLVABLE


def test_analyze_inconclusive_when_budget_is_zero():
    # 8-crossing unknot diagram that needs search: invariants trivial, no budget to certify
    from knotpuzzle.diagram import braid_to_pd, parse_braid

    pd = braid_to_pd(parse_braid("1 2 -1 -2 1 -2 -1 2"))
    v = analyze(Puzzle(parse_word("xy"), 0, pd), budget=0)
    assert v.kind == INCONCLUSIVE
    assert v.report["budget"] == 0 and v.report["jones"] == "1"


def test_verdict_soundness_on_random_words():
    rng = random.Random(23)
    for _ in range(15):
        w = parse_word(random_word(rng, 4))
        v = analyze(Puzzle(w), budget=300)
        if v.kind == SOLVABLE:
            assert v.certificate.verify()
        elif v.kind == UNSOLVABLE:
            wit = v.obstruction.witness
            assert not (wit.is_one() if hasattr(wit, "is_one") else wit.is_identity())


def test_parse_puzzle(tmp_path):
    (tmp_path / "k.pd").write_text("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)\n")
    p = parse_puzzle("# comment\nword = xy  # trailing\ntwists = -1\nknot = k.pd\n", base_dir=tmp_path)
    assert p.arc_word == parse_word("xy") and p.band_twists == -1 and p.explicit_knot == TREFOIL
    for bad in ("twists = 1", "word = xy\nword = yx", "word = xz", "word = xy\ntwists = one", "colour = red"):
        with pytest.raises(ParseError):
            parse_puzzle(bad)
