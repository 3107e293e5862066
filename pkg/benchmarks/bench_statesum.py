"""Compiled vs pure-Python state-sum kernel.

Runs both kernels over the full state range of braid closures of growing size,
checks that the histograms agree and prints wall times.

    python3 benchmarks/bench_statesum.py --max-crossings 16
"""

from __future__ import annotations

import argparse
import time

from knotpuzzle.diagram import braid_to_pd, parse_braid
from knotpuzzle.invariants.bracket import available_backends, state_histogram


def diagram(n: int):
    # alternating 3-braid word of length n, closed up
    letters = " ".join("1" if i % 2 == 0 else "-2" for i in range(n))
    return braid_to_pd(parse_braid(letters, strands=3))


def best_of(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min-crossings", type=int, default=6)
    ap.add_argument("--max-crossings", type=int, default=14)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = available_backends()
    if "compiled" not in backends:
        print("compiled kernel not built; only the Python kernel is available")
    print(f"{'n':>3} {'states':>8} " + " ".join(f"{b:>10}" for b in backends) + "   speedup")
    for n in range(args.min_crossings, args.max_crossings + 1, 2):
        pd = diagram(n)
        hists = {b: state_histogram(pd, backend=b) for b in backends}
        if len({repr(h) for h in hists.values()}) != 1:
            raise SystemExit(f"kernels disagree at n={n}")
        times = {b: best_of(lambda b=b: state_histogram(pd, backend=b), args.repeat) for b in backends}
        cells = " ".join(f"{times[b] * 1e3:>8.2f}ms" for b in backends)
        speed = f"{times['python'] / times['compiled']:>8.1f}x" if "compiled" in times else ""
        print(f"{n:>3} {1 << n:>8} {cells} {speed}")


if __name__ == "__main__":
    main()
