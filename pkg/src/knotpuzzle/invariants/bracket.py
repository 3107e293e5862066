"""Kauffman bracket and Jones polynomial.

Two evaluation strategies sit behind :func:`kauffman_bracket`:

``"enumerate"``
    Visit all ``2**n`` smoothing states and count loops with a union-find.
    The inner loop runs in a compiled extension when it is importable and in
    :mod:`knotpuzzle.invariants.statesum_py` otherwise.  The state range can
    be split across worker processes; partial histograms are summed exactly,
    so the result does not depend on the split.

``"contract"``
    Absorb crossings one at a time, keeping a table from the open-strand
    pairing of the partial tangle to its accumulated polynomial.  Much faster
    for larger diagrams and an independent check on the enumeration.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence

import numpy as np

from knotpuzzle.diagram.pd import PDCode, components, validate, writhe
from knotpuzzle.errors import LimitExceeded, NotAKnot, ValidationError
from knotpuzzle.invariants import statesum_py
from knotpuzzle.polynomial import (
    ONE,
    ZERO,
    LaurentPoly,
    exact_div,
    substitute_quarter_power,
)

try:
    from knotpuzzle.invariants._statesum import bracket_histogram as _compiled_histogram
except ImportError:  # pragma: no cover - depends on the build
    _compiled_histogram = None

__all__ = [
    "CROSSING_CAP",
    "DELTA",
    "BACKEND",
    "available_backends",
    "kauffman_bracket",
    "jones",
]

CROSSING_CAP = 24

# loop value -A^2 - A^-2, stored with A-exponents
DELTA = LaurentPoly({2: -1, -2: -1})

BACKEND = "compiled" if _compiled_histogram is not None else "python"


def available_backends() -> list[str]:
    return ["compiled", "python"] if _compiled_histogram is not None else ["python"]


def _kernel(backend: str) -> Callable:
    if backend == "compiled":
        if _compiled_histogram is None:
            raise RuntimeError("compiled state-sum kernel is not built")
        return _compiled_histogram
    if backend == "python":
        return statesum_py.bracket_histogram
    raise ValueError(f"unknown backend {backend!r}")


def _index_labels(pd: PDCode) -> tuple[list[tuple[int, int, int, int]], int]:
    index = {v: i for i, v in enumerate(pd.labels())}
    return [tuple(index[v] for v in x) for x in pd.crossings], len(index)  # type: ignore[misc]


def _histogram_chunk(args: tuple) -> list[list[int]]:
    backend, cross, n_labels, start, stop = args
    kernel = _kernel(backend)
    if backend == "compiled":
        arr = np.ascontiguousarray(np.asarray(cross, dtype=np.intc).reshape(-1, 4))
        return kernel(arr, n_labels, start, stop).tolist()
    return kernel(cross, n_labels, start, stop)


def state_histogram(
    pd: PDCode, backend: str | None = None, workers: int = 1, chunks: int | None = None
) -> list[list[int]]:
    """``hist[a][loops]`` over all states, loops counted without free loops."""
    backend = backend or BACKEND
    cross, n_labels = _index_labels(pd)
    n = len(cross)
    total = 1 << n
    parts = chunks if chunks is not None else max(1, workers)
    parts = max(1, min(parts, total))
    bounds = [total * k // parts for k in range(parts + 1)]
    jobs = [(backend, cross, n_labels, bounds[k], bounds[k + 1]) for k in range(parts)]
    if workers > 1 and parts > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            partials = list(pool.map(_histogram_chunk, jobs))
    else:
        partials = [_histogram_chunk(job) for job in jobs]
    hist = [[0] * (n_labels + 1) for _ in range(n + 1)]
    for part in partials:
        for a, row in enumerate(part):
            for loops, count in enumerate(row):
                if count:
                    hist[a][loops] += int(count)
    return hist


def _bracket_from_histogram(hist: Sequence[Sequence[int]], n: int, free_loops: int) -> LaurentPoly:
    result = ZERO
    delta_pow = [ONE]
    for a, row in enumerate(hist):
        for loops, count in enumerate(row):
            if not count:
                continue
            k = loops + free_loops - 1
            while len(delta_pow) <= k:
                delta_pow.append(delta_pow[-1] * DELTA)
            result = result + LaurentPoly({2 * a - n: count}) * delta_pow[k]
    return result


def _contraction_order(crossings: Sequence[tuple[int, ...]]) -> list[int]:
    n = len(crossings)
    left = set(range(n))
    order: list[int] = []
    open_labels: set[int] = set()
    while left:
        best = min(left, key=lambda i: (-sum(v in open_labels for v in crossings[i]), i))
        order.append(best)
        left.remove(best)
        for v in crossings[best]:
            if v in open_labels:
                open_labels.remove(v)
            else:
                open_labels.add(v)
    return order


def _add_arc(ends: dict[int, int], u: int, v: int) -> int:
    """Attach a smoothing arc ``u``-``v`` to the open paths; returns loops closed."""
    if u == v:
        return 1
    eu = ends.pop(u, None)
    ev = ends.pop(v, None)
    if eu is None and ev is None:
        ends[u] = v
        ends[v] = u
        return 0
    if eu is not None and ev is None:
        ends[eu] = v
        ends[v] = eu
        return 0
    if eu is None:
        ends[ev] = u
        ends[u] = ev
        return 0
    if eu == v:
        return 1
    ends[eu] = ev
    ends[ev] = eu
    return 0


def _bracket_contract(pd: PDCode) -> LaurentPoly:
    crossings = pd.crossings
    n = len(crossings)
    # key: sorted open-end pairing; value: polynomial in A times delta**(closed loops)
    states: dict[tuple, LaurentPoly] = {(): ONE}
    for i in _contraction_order(crossings):
        a, b, c, d = crossings[i]
        nxt: dict[tuple, LaurentPoly] = {}
        for key, value in states.items():
            for weight, pairs in ((1, ((a, b), (c, d))), (-1, ((a, d), (b, c)))):
                ends = dict(key)
                closed = 0
                for u, v in pairs:
                    closed += _add_arc(ends, u, v)
                term = value * LaurentPoly({weight: 1})
                for _ in range(closed):
                    term = term * DELTA
                k = tuple(sorted(ends.items()))
                prev = nxt.get(k)
                nxt[k] = term if prev is None else prev + term
        states = {k: v for k, v in nxt.items() if not v.is_zero()}
    total = states.get((), ZERO)
    if n:
        total = exact_div(total, DELTA)
    for _ in range(pd.free_loops):
        total = total * DELTA
    return total


def kauffman_bracket(
    pd: PDCode,
    cap: int = CROSSING_CAP,
    strategy: str = "enumerate",
    backend: str | None = None,
    workers: int = 1,
) -> LaurentPoly:
    """Bracket polynomial in ``A`` (stored exponents are powers of ``A``).

    Normalised so the crossingless circle has bracket 1.
    """
    n = pd.crossing_count
    if n > cap:
        raise LimitExceeded(f"{n} crossings exceeds the state-sum cap of {cap}")
    if n == 0:
        if pd.free_loops == 0:
            raise ValidationError("empty diagram has no bracket")
        return DELTA ** (pd.free_loops - 1)
    if strategy == "enumerate":
        hist = state_histogram(pd, backend=backend, workers=workers)
        return _bracket_from_histogram(hist, n, pd.free_loops)
    if strategy == "contract":
        return _bracket_contract(pd)
    raise ValueError(f"unknown strategy {strategy!r}")


def jones(pd: PDCode, cap: int = CROSSING_CAP, strategy: str = "enumerate", **kw) -> LaurentPoly:
    """Jones polynomial in ``t`` of a knot diagram, ``(-A^3)^(-w) <D>`` at ``A = t^(-1/4)``."""
    validate(pd)
    if components(pd) != 1:
        raise NotAKnot(f"Jones polynomial is computed for knots only; diagram has {components(pd)} components")
    w = writhe(pd)
    norm = LaurentPoly({-3 * w: -1 if w % 2 else 1})  # (-A^3)^(-w)
    v = substitute_quarter_power(norm * kauffman_bracket(pd, cap=cap, strategy=strategy, **kw), -1)
    if not v.on_integer_grid():
        raise AssertionError("Jones polynomial of a knot must have whole exponents")
    return v
