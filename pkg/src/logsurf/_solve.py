"""Exact linear algebra over the rationals.

Systems are cleared to integers row by row and eliminated fraction-free
(Bareiss), with partial pivoting by absolute numerator size.  Pivot choice
cannot affect the exact solution; it only keeps intermediate integers small.
"""
from __future__ import annotations

from fractions import Fraction as Q
from math import lcm


def solve_symmetric(matrix: list[list[int]], rhs: list[Q]) -> list[Q] | None:
    """Solve A x = b exactly for square integer A.  None if A is singular."""
    n = len(matrix)
    if n == 0:
        return []
    rows: list[list[int]] = []
    for i in range(n):
        b = Q(rhs[i])
        scale = lcm(1, b.denominator)
        rows.append([int(a) * scale for a in matrix[i]] + [int(b * scale)])

    prev = 1
    for k in range(n):
        piv = max(range(k, n), key=lambda r: abs(rows[r][k]))
        if rows[piv][k] == 0:
            return None
        if piv != k:
            rows[k], rows[piv] = rows[piv], rows[k]
        pivot = rows[k][k]
        for r in range(k + 1, n):
            factor = rows[r][k]
            row_r, row_k = rows[r], rows[k]
            for c in range(k + 1, n + 1):
                row_r[c] = (row_r[c] * pivot - factor * row_k[c]) // prev
            row_r[k] = 0
        prev = pivot

    xs = [Q(0)] * n
    for i in range(n - 1, -1, -1):
        s = Q(rows[i][n])
        for j in range(i + 1, n):
            s -= rows[i][j] * xs[j]
        xs[i] = s / rows[i][i]
    return xs


def is_negative_definite_matrix(matrix: list[list[int]]) -> bool:
    """Sylvester test: k-th leading principal minor must have sign (-1)^k.

    Fraction-free elimination without row swaps; after step k the pivot in
    position (k, k) equals the (k+1)-st leading principal minor, so a zero
    or wrong-signed pivot decides immediately.
    """
    n = len(matrix)
    if n == 0:
        return True
    rows = [list(map(int, row)) for row in matrix]
    prev = 1
    for k in range(n):
        pivot = rows[k][k]
        want_negative = k % 2 == 0
        if pivot == 0 or (pivot < 0) != want_negative:
            return False
        for r in range(k + 1, n):
            factor = rows[r][k]
            row_r, row_k = rows[r], rows[k]
            for c in range(k + 1, n):
                row_r[c] = (row_r[c] * pivot - factor * row_k[c]) // prev
            row_r[k] = 0
        prev = pivot
    return True
