"""Exact determinants over the Laurent polynomial ring."""

from __future__ import annotations

from typing import Sequence

from knotpuzzle.polynomial import ONE, ZERO, LaurentPoly, exact_div

Matrix = Sequence[Sequence[LaurentPoly]]


def det_cofactor(m: Matrix) -> LaurentPoly:
    """Laplace expansion along rows, memoised on the set of used columns."""
    n = len(m)
    if n == 0:
        return ONE
    rows = [[(j, e) for j, e in enumerate(row) if not e.is_zero()] for row in m]
    memo: dict[int, LaurentPoly] = {}

    def minor(i: int, used: int) -> LaurentPoly:
        if i == n:
            return ONE
        hit = memo.get(used)
        if hit is not None:
            return hit
        total = ZERO
        for j, e in rows[i]:
            bit = 1 << j
            if used & bit:
                continue
            # sign = (-1)^(number of free columns left of j)
            free_left = j - bin(used & (bit - 1)).count("1")
            sub = minor(i + 1, used | bit)
            if sub.is_zero():
                continue
            term = e * sub
            total = total - term if free_left % 2 else total + term
        memo[used] = total
        return total

    return minor(0, 0)


def det_bareiss(m: Matrix) -> LaurentPoly:
    """Fraction-free Bareiss elimination; every division is exact in this ring."""
    n = len(m)
    if n == 0:
        return ONE
    a = [list(row) for row in m]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if a[k][k].is_zero():
            swap = next((r for r in range(k + 1, n) if not a[r][k].is_zero()), None)
            if swap is None:
                return ZERO
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev)
        prev = a[k][k]
    d = a[n - 1][n - 1]
    return -d if sign < 0 else d


def determinant(m: Matrix, method: str = "cofactor") -> LaurentPoly:
    if method == "cofactor":
        return det_cofactor(m)
    if method == "bareiss":
        return det_bareiss(m)
    raise ValueError(f"unknown determinant method {method!r}")
