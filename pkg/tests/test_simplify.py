import random

import pytest

from knotpuzzle.diagram import PDCode, braid_to_pd, components, parse_braid, parse_pd, validate, writhe
from knotpuzzle.diagram.planar import Diagram
from knotpuzzle.diagram.simplify import greedy_reduce, reidemeister_simplify, replay

TREFOIL = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)")


def all_moves(d: Diagram) -> list:
    return (
        list(d.r1_sites())
        + list(d.r2_sites())
        + list(d.r3_sites())
        + list(d.r2_insert_sites())
        + list(d.r1_insert_sites())
    )


def test_roundtrip_through_diagram():
    for pd in (TREFOIL, braid_to_pd(parse_braid("1 -2 1 -2")), PDCode((), 2)):
        back = Diagram.from_pd(pd).to_pd()
        validate(back)
        assert back.crossing_count == pd.crossing_count
        assert components(back) == components(pd)
        assert writhe(back) == writhe(pd)


def test_kink_removed_by_r1():
    res = reidemeister_simplify(braid_to_pd(parse_braid("1")))
    assert res.reached_zero and res.pd == PDCode((), 1)
    assert [m[0] for m in res.moves] == ["R1"]


def test_clasp_removed_by_r2():
    res = reidemeister_simplify(braid_to_pd(parse_braid("1 -1")))
    assert res.reached_zero and res.pd.free_loops == 2
    assert [m[0] for m in res.moves] == ["R2"]


def test_trefoil_never_reaches_zero():
    for budget in (0, 10, 2000):
        res = reidemeister_simplify(TREFOIL, budget=budget)
        assert res.crossings == 3 and not res.reached_zero


def test_needs_r3_to_unknot():
    # an unknot diagram with no R1 or R2 reduction available at the start
    pd = braid_to_pd(parse_braid("1 2 -1 -2 1 -2 -1 2"))
    d = Diagram.from_pd(pd)
    log: list = []
    greedy_reduce(d, log)
    assert log == [] and len(d) == 8
    res = reidemeister_simplify(pd)
    assert res.reached_zero and res.moves[0][0] == "R3"
    assert replay(pd, res.moves).crossing_count == 0


def test_result_is_deterministic():
    pd = braid_to_pd(parse_braid("1 2 -1 -2 1 -2 -1 2"))
    assert reidemeister_simplify(pd) == reidemeister_simplify(pd)


def test_never_increases_crossings():
    rng = random.Random(2)
    for _ in range(20):
        word = " ".join(str(rng.choice([1, -1]) * rng.randint(1, 3)) for _ in range(rng.randint(1, 8)))
        pd = braid_to_pd(parse_braid(word, strands=4))
        res = reidemeister_simplify(pd, budget=200)
        assert res.crossings <= pd.crossing_count
        assert replay(pd, res.moves) == res.pd


def test_replay_rejects_bad_moves():
    with pytest.raises(ValueError):
        replay(TREFOIL, [("R1", 0, 0)])
    with pytest.raises(ValueError):
        replay(TREFOIL, [("R2", 7, 0)])
    with pytest.raises(ValueError):
        replay(TREFOIL, [("R9", 0, 0)])


def test_random_moves_keep_diagrams_valid():
    rng = random.Random(11)
    for start in (TREFOIL, PDCode((), 1), braid_to_pd(parse_braid("1 1 -2"))):
        for _ in range(40):
            d = Diagram.from_pd(start)
            for _ in range(6):
                d.apply(rng.choice(all_moves(d)))
                assert d.euler_ok()
            pd = d.to_pd()
            validate(pd)
            assert components(pd) == components(start)


def test_r1_insert_then_remove():
    d = Diagram.from_pd(PDCode((), 1))
    for move in list(d.r1_insert_sites()):
        e = d.copy()
        e.apply(move)
        assert len(e) == 1 and e.free_loops == 0
        (r1,) = list(e.r1_sites())[:1]
        e.apply(r1)
        assert len(e) == 0 and e.free_loops == 1


def test_canonical_key_ignores_labels():
    a = Diagram.from_pd(TREFOIL)
    b = Diagram.from_pd(parse_pd("X(3,6,4,1) X(5,2,6,3) X(1,4,2,5)"))
    assert a.canonical_key() == b.canonical_key()
    assert a.canonical_key() != Diagram.from_pd(braid_to_pd(parse_braid("1 1 1"))).canonical_key()
