"""Command-line front end.

Subcommands: ``analyze``, ``invariants``, ``build`` and ``simplify``.  Every
command can print plain text or a single JSON document (``--format json``);
both carry the same facts.  Exit status is 0 for any clean answer, 2 for
unreadable or invalid input and 3 when a computation limit is hit.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from importlib import resources
from pathlib import Path
from typing import Any, Sequence

from knotpuzzle.diagram.braid import braid_to_pd, parse_braid
from knotpuzzle.diagram.pd import PDCode, components, parse_pd, render_pd, validate, writhe
from knotpuzzle.diagram.planar import Move
from knotpuzzle.diagram.simplify import DEFAULT_BUDGET, reidemeister_simplify
from knotpuzzle.errors import (
    InconsistentInput,
    LimitExceeded,
    NotAKnot,
    ParseError,
    ValidationError,
)
from knotpuzzle.freegroup import FreeWord, core, is_homotopically_trivial, parse_word, render_word
from knotpuzzle.invariants import alexander, jones
from knotpuzzle.polynomial import LaurentPoly, render
from knotpuzzle.puzzle import Puzzle, Verdict, analyze, build_knot, load_puzzle

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_LIMIT = 3


class InputError(Exception):
    """Bad command-line input that is not a parse failure of a file."""


def fixture_path(name: str) -> Path:
    return Path(str(resources.files("knotpuzzle") / "fixtures" / name))


def _resolve(path: str) -> Path:
    """Use ``path`` as given, falling back to a shipped fixture of that name."""
    p = Path(path)
    if p.exists():
        return p
    shipped = fixture_path(p.name)
    if shipped.exists():
        return shipped
    raise InputError(f"no such file: {path}")


def _read_pd(path: str) -> PDCode:
    return parse_pd(_resolve(path).read_text())


def format_move(move: Move) -> str:
    kind, *rest = move
    if kind == "R2+":
        c1, s1, c2, s2, over = rest
        return f"R2+ {c1}.{s1} {c2}.{s2} {'over' if over else 'under'}"
    if kind == "R1+":
        c, s, side, over = rest
        where = "loop" if c < 0 else f"{c}.{s}"
        return f"R1+ {where} {'left' if side == 0 else 'right'} {'over' if over else 'under'}"
    c, s = rest
    return f"{kind} {c}.{s}"


def _poly(p: LaurentPoly) -> str:
    return render(p)


def _witness(w: LaurentPoly | FreeWord) -> str:
    return _poly(w) if isinstance(w, LaurentPoly) else render_word(w)


# ---- diagram input shared by invariants/simplify


def _diagram_from_args(args: argparse.Namespace) -> tuple[PDCode, dict[str, Any]]:
    given = [x for x in ("pd", "braid", "word") if getattr(args, x, None) is not None]
    if len(given) != 1:
        raise InputError("give exactly one of --pd/--knot, --braid, --word")
    if args.pd is not None:
        return _read_pd(args.pd), {"pd": args.pd}
    if args.braid is not None:
        return braid_to_pd(parse_braid(args.braid)), {"braid": args.braid}
    w = parse_word(args.word)
    return build_knot(w, args.twists), {"word": render_word(w), "twists": args.twists}


# ---- commands: each returns a report dict; rendering is separate


def cmd_analyze(args: argparse.Namespace) -> dict[str, Any]:
    if args.puzzle is not None:
        if args.word is not None or args.knot is not None:
            raise InputError("a puzzle file cannot be combined with --word or --knot")
        p = load_puzzle(_resolve(args.puzzle))
        source: dict[str, Any] = {"puzzle": args.puzzle}
    else:
        if args.word is None:
            raise InputError("analyze needs --word or a puzzle file")
        knot = _read_pd(args.knot) if args.knot is not None else None
        p = Puzzle(parse_word(args.word), args.twists, knot)
        source = {"knot": args.knot}
    source.update(
        word=render_word(p.arc_word),
        twists=p.band_twists,
        budget=args.budget,
    )
    v = analyze(p, budget=args.budget)
    report: dict[str, Any] = {
        "command": "analyze",
        "input": source,
        "homotopically_trivial": is_homotopically_trivial(p.arc_word),
        "word_core": render_word(core(p.arc_word)),
        "verdict": v.kind,
    }
    report["evidence"] = _evidence(v)
    return report


def _evidence(v: Verdict) -> dict[str, Any]:
    if v.obstruction is not None:
        return {"obstruction": v.obstruction.kind, "witness": _witness(v.obstruction.witness)}
    if v.certificate is not None:
        c = v.certificate
        return {
            "start_crossings": c.start.crossing_count,
            "states_explored": c.states_explored,
            "certificate": [format_move(m) for m in c.moves],
        }
    return dict(v.report)


def cmd_invariants(args: argparse.Namespace) -> dict[str, Any]:
    pd, source = _diagram_from_args(args)
    validate(pd)
    n_comp = components(pd)
    report: dict[str, Any] = {
        "command": "invariants",
        "input": source,
        "crossings": pd.crossing_count,
        "components": n_comp,
        "writhe": writhe(pd),
    }
    try:
        report["jones"] = _poly(jones(pd))
    except NotAKnot as exc:
        report["jones"] = None
        report["jones_note"] = f"NotAKnot: {exc}"
    try:
        report["alexander"] = _poly(alexander(pd))
    except NotAKnot as exc:
        report["alexander"] = None
        report["alexander_note"] = f"NotAKnot: {exc}"
    return report


def cmd_build(args: argparse.Namespace) -> dict[str, Any]:
    w = parse_word(args.word)
    pd = build_knot(w, args.twists)
    text = render_pd(pd)
    if args.out is not None:
        Path(args.out).write_text(text + "\n")
    return {
        "command": "build",
        "input": {"word": render_word(w), "twists": args.twists},
        "crossings": pd.crossing_count,
        "out": args.out,
        "pd": text,
    }


def cmd_simplify(args: argparse.Namespace) -> dict[str, Any]:
    pd, source = _diagram_from_args(args)
    source["budget"] = args.budget
    result = reidemeister_simplify(pd, budget=args.budget)
    return {
        "command": "simplify",
        "input": source,
        "start_crossings": pd.crossing_count,
        "crossings": result.crossings,
        "reached_zero": result.reached_zero,
        "states_explored": result.states_explored,
        "budget_exhausted": result.budget_exhausted,
        "moves": [format_move(m) for m in result.moves],
        "pd": render_pd(result.pd),
    }


# ---- text rendering


def _text_lines(report: dict[str, Any]) -> list[str]:
    cmd = report["command"]
    lines = [f"command: {cmd}"]
    for key, value in report["input"].items():
        if value is not None:
            lines.append(f"{key}: {value}")
    if cmd == "analyze":
        lines.append(f"homotopically trivial: {'yes' if report['homotopically_trivial'] else 'no'}")
        lines.append(f"word core: {report['word_core']}")
        lines.append(f"verdict: {report['verdict']}")
        ev = report["evidence"]
        if "obstruction" in ev:
            lines.append(f"obstruction: {ev['obstruction']}")
            lines.append(f"witness: {ev['witness']}")
        elif "certificate" in ev:
            lines.append(f"start crossings: {ev['start_crossings']}")
            lines.append(f"states explored: {ev['states_explored']}")
            lines.append(f"certificate ({len(ev['certificate'])} moves):")
            lines.extend(f"  {m}" for m in ev["certificate"])
        else:
            lines.extend(f"{k}: {v}" for k, v in ev.items())
    elif cmd == "invariants":
        lines.append(f"crossings: {report['crossings']}")
        lines.append(f"components: {report['components']}")
        lines.append(f"writhe: {report['writhe']}")
        for name in ("jones", "alexander"):
            value = report[name]
            lines.append(f"{name}: {value if value is not None else report[name + '_note']}")
    elif cmd == "build":
        lines.append(f"crossings: {report['crossings']}")
        if report["out"] is None:
            lines.append(report["pd"])
    elif cmd == "simplify":
        lines.append(f"start crossings: {report['start_crossings']}")
        lines.append(f"crossings: {report['crossings']}")
        lines.append(f"reached zero: {'yes' if report['reached_zero'] else 'no'}")
        lines.append(f"states explored: {report['states_explored']}")
        lines.append(f"budget exhausted: {'yes' if report['budget_exhausted'] else 'no'}")
        lines.append(f"moves ({len(report['moves'])}):")
        lines.extend(f"  {m}" for m in report["moves"])
        lines.append(f"pd: {report['pd']}")
    lines.append(f"elapsed: {report['elapsed_s']:.3f} s")
    return lines


def render_report(report: dict[str, Any], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=True)
    return "\n".join(_text_lines(report))


# ---- argument parsing


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text")


def _add_diagram_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("--pd", "--knot", dest="pd", help="PD file (a shipped fixture name also works)")
    p.add_argument("--braid", help='braid word such as "1 1 -2"')
    p.add_argument("--word", help="build the associated knot of this arc word")
    p.add_argument("--twists", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="knotpuzzle", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="decide or obstruct solvability of a puzzle")
    p.add_argument("puzzle", nargs="?", help=".puzzle file (a shipped fixture name also works)")
    p.add_argument("--word")
    p.add_argument("--twists", type=int, default=0)
    p.add_argument("--knot", "--pd", dest="knot", help="explicit PD diagram of the associated knot")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    _add_format(p)

    p = sub.add_parser("invariants", help="Jones and Alexander polynomials of a diagram")
    _add_diagram_input(p)
    _add_format(p)

    p = sub.add_parser("build", help="PD code of the canonical associated knot")
    p.add_argument("--word", required=True)
    p.add_argument("--twists", type=int, default=0)
    p.add_argument("--out")
    _add_format(p)

    p = sub.add_parser("simplify", help="Reidemeister simplification with a move log")
    _add_diagram_input(p)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    _add_format(p)
    return parser


COMMANDS = {
    "analyze": cmd_analyze,
    "invariants": cmd_invariants,
    "build": cmd_build,
    "simplify": cmd_simplify,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "budget", 1) < 0:
        print("error: --budget must be non-negative", file=sys.stderr)
        return EXIT_INPUT
    start = time.perf_counter()
    try:
        report = COMMANDS[args.command](args)
    except (ParseError, ValidationError, InconsistentInput, InputError, NotAKnot, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except LimitExceeded as exc:
        print(f"error: LimitExceeded: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    report["elapsed_s"] = round(time.perf_counter() - start, 3)
    print(render_report(report, args.format))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
