"""Exact linear algebra over the integers and rationals."""
from __future__ import annotations

from fractions import Fraction


def leading_minors(m) -> list[int]:
    """All leading principal minors of an integer matrix, by Bareiss elimination.

    Fraction-free: every intermediate entry is an exact integer. A zero pivot
    ends the sequence early with a 0 appended (the remaining minors are not
    needed for a definiteness test).
    """
    n = len(m)
    a = [list(map(int, row)) for row in m]
    minors = []
    prev = 1
    for k in range(n):
        pivot = a[k][k]
        minors.append(pivot)
        if pivot == 0:
            break
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return minors


def determinant(m) -> int:
    minors = leading_minors(m)
    if len(minors) < len(m):
        # zero pivot: fall back to rational elimination with row swaps
        return int(_det_rational(m))
    return minors[-1] if minors else 1


def _det_rational(m) -> Fraction:
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                for k in range(c, n):
                    a[r][k] -= f * a[c][k]
    return det


def solve(m, rhs) -> list[Fraction]:
    """Solve ``m x = rhs`` exactly; ``m`` must be nonsingular."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(m)]
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        row_c = a[c]
        for r in range(n):
            if r != c and a[r][c]:
                f = a[r][c] / piv
                row_r = a[r]
                for k in range(c, n + 1):
                    row_r[k] -= f * row_c[k]
    return [a[i][n] / a[i][i] for i in range(n)]
