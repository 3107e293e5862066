"""Acceptance checks, one printed PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -v`` (the lines are printed even
when output is captured) or directly with ``python3 tests/test_acceptance.py``.
"""

import random
import subprocess
import sys
import time
from pathlib import Path

import pytest
import sympy as sp

from knotpuzzle.cli import fixture_path
from knotpuzzle.diagram import components, mirror, parse_pd, validate
from knotpuzzle.diagram.simplify import DEFAULT_BUDGET
from knotpuzzle.freegroup import is_homotopically_trivial, parse_word
from knotpuzzle.invariants import alexander, jones
from knotpuzzle.polynomial import ONE, parse_poly
from knotpuzzle.puzzle import SOLVABLE, UNSOLVABLE, Puzzle, analyze, build_knot
from oracles import TREFOIL_LEFT, TREFOIL_RIGHT, laurent_coeffs, to_sympy

HERE = Path(__file__).parent


def report(number: int, title: str, ok: bool, seconds: float, detail: str = "") -> str:
    line = f"[{'PASS' if ok else 'FAIL'}] {number}. {title} ({seconds:.3f} s)"
    return line + (f": {detail}" if detail else "")


def timed(fn):
    t0 = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - t0


def criterion_1():
    expected = {"xy": True, "yx": False, "yxyx": False}
    got, slowest = {}, 0.0
    for w, want in expected.items():
        word = parse_word(w)
        got[w], dt = timed(lambda: is_homotopically_trivial(word))
        slowest = max(slowest, dt)
    ok = got == expected and slowest < 1e-3
    return ok, slowest, f"{got}, slowest {slowest * 1e6:.0f} us"


def criterion_2():
    target = parse_poly("t^-5 - t^-4 - t^-1 + 2 - t + t^2 + t^5 - t^6")
    pd = parse_pd(fixture_path("fig6.pd").read_text())
    (v, d), dt = timed(lambda: (jones(pd), alexander(pd)))
    mirrored = jones(mirror(pd))
    chirality = mirrored != target and mirrored == target.invert_variable()
    ok = v == target and d == ONE and chirality and dt < 5
    return ok, dt, f"{pd.crossing_count} crossings, jones exact {v == target}, alexander {d}, mirror differs {chirality}"


def criterion_3():
    square = sp.expand(TREFOIL_RIGHT * TREFOIL_LEFT)
    literal = 3 - sp.Symbol("t") - sp.Symbol("t") ** -1 + sp.Symbol("t") ** 2
    literal += sp.Symbol("t") ** -2 - sp.Symbol("t") ** 3 - sp.Symbol("t") ** -3
    oracle_ok = sp.expand(square - literal) == 0

    def run():
        verdict = analyze(Puzzle(parse_word("yx")))
        v = jones(build_knot(parse_word("yx"), 0))
        return verdict, v

    (verdict, v), dt = timed(run)
    match = laurent_coeffs(to_sympy(v)) == laurent_coeffs(square)
    ok = verdict.kind == UNSOLVABLE and match and oracle_ok and dt < 30
    return ok, dt, f"verdict {verdict.kind}, jones = trefoil x mirror {match}"


def criterion_4():
    verdict, dt = timed(lambda: analyze(Puzzle(parse_word("xy")), budget=DEFAULT_BUDGET))
    cert = verdict.certificate
    replayed = cert is not None and cert.verify()
    ok = verdict.kind == SOLVABLE and replayed
    n = len(cert) if cert is not None else 0
    return ok, dt, f"verdict {verdict.kind}, {n}-move certificate replays to 0 crossings {replayed}"


def criterion_5():
    cmd = [sys.executable, "-m", "pytest", "-q", "-p", "no:cacheprovider", str(HERE / "test_properties.py")]
    proc, dt = timed(lambda: subprocess.run(cmd, capture_output=True, text=True, cwd=HERE.parent))
    summary = proc.stdout.strip().splitlines()[-1] if proc.stdout.strip() else proc.stderr.strip()[-200:]
    ok = proc.returncode == 0 and dt < 120
    return ok, dt, summary


def criterion_6():
    rng = random.Random(2024)

    inverse = {"x": "X", "X": "x", "y": "Y", "Y": "y"}

    def reduced_word(length: int) -> str:
        out = ""
        while len(out) < length:
            c = rng.choice("xyXY")
            if not out or inverse[c] != out[-1]:
                out += c
        return out

    def run():
        bad = []
        for _ in range(200):
            w = reduced_word(rng.randint(0, 6))
            tw = rng.randint(-3, 3)
            nx = sum(c in "xX" for c in w)
            ny = len(w) - nx
            pd = build_knot(parse_word(w or "1"), tw)
            validate(pd)
            if pd.crossing_count != 4 + 8 * nx + 4 * ny + 2 * abs(tw) or components(pd) != 1:
                bad.append((w, tw))
        return bad

    bad, dt = timed(run)
    return not bad, dt, f"200 random words, mismatches {bad[:3]}"


CRITERIA = [
    (1, "homotopy verdicts xy / yx / yxyx", criterion_1),
    (2, "fig6 Jones and Alexander, chirality", criterion_2),
    (3, "coffin: Unsolvable, square-knot Jones", criterion_3),
    (4, "entanglement: Solvable with replayable certificate", criterion_4),
    (5, "property suite under 2 minutes", criterion_5),
    (6, "build_knot crossing formula, validity, one component", criterion_6),
]


@pytest.mark.parametrize("number,title,check", CRITERIA, ids=[f"criterion-{c[0]}" for c in CRITERIA])
def test_criterion(number, title, check, capsys):
    ok, dt, detail = check()
    with capsys.disabled():
        print("\n" + report(number, title, ok, dt, detail))
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for number, title, check in CRITERIA:
        ok, dt, detail = check()
        failed += not ok
        print(report(number, title, ok, dt, detail))
    sys.exit(1 if failed else 0)
