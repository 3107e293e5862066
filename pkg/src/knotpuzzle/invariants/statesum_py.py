"""Pure-Python state-sum kernel, used when the compiled extension is absent.

For every smoothing state of the crossings in ``[start, stop)`` (bit ``i`` set
means the A-smoothing of crossing ``i``) count the loops with a union-find
over edge labels.  The result ``hist[a][loops]`` counts states with ``a``
A-smoothings and ``loops`` closed curves.
"""

from __future__ import annotations

from typing import Sequence


def bracket_histogram(
    cross: Sequence[Sequence[int]], n_labels: int, start: int, stop: int
) -> list[list[int]]:
    n = len(cross)
    hist = [[0] * (n_labels + 1) for _ in range(n + 1)]
    a_pairs = [((x[0], x[1]), (x[2], x[3])) for x in cross]
    b_pairs = [((x[0], x[3]), (x[1], x[2])) for x in cross]
    for mask in range(start, stop):
        parent = list(range(n_labels))
        unions = 0
        acount = 0
        for i in range(n):
            if (mask >> i) & 1:
                acount += 1
                pairs = a_pairs[i]
            else:
                pairs = b_pairs[i]
            for x, y in pairs:
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                while parent[y] != y:
                    parent[y] = parent[parent[y]]
                    y = parent[y]
                if x != y:
                    parent[x] = y
                    unions += 1
        hist[acount][n_labels - unions] += 1
    return hist
