"""Exact linear algebra over the integers and rationals.

Everything works with arbitrary-precision ints and ``fractions.Fraction``;
no floating point is used anywhere in the package.
"""

from __future__ import annotations

from fractions import Fraction

IntMatrix = tuple[tuple[int, ...], ...]


def bareiss_determinant(m) -> int:
    """Determinant of an integer matrix, by fraction-free Bareiss elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [[int(x) for x in row] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def submatrix(m, indices) -> IntMatrix:
    """Principal submatrix on the given (sorted) index set."""
    return tuple(tuple(m[i][j] for j in indices) for i in indices)


def solve(m, rhs) -> list[Fraction] | None:
    """Solve m*x = rhs exactly; returns None when m is singular."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col] / pv
                for j in range(col, n + 1):
                    a[r][j] -= f * a[col][j]
    return [a[i][n] / a[i][i] for i in range(n)]


def invert(m) -> list[list[Fraction]] | None:
    """Exact inverse via Gauss-Jordan; returns None when m is singular."""
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    inv = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        inv[col] = [x / pv for x in inv[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    return inv


def is_positive_definite(m) -> bool:
    """Exact symmetric-elimination test: all pivots strictly positive."""
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    for k in range(n):
        p = a[k][k]
        if p <= 0:
            return False
        for i in range(k + 1, n):
            if a[i][k] == 0:
                continue
            f = a[i][k] / p
            for j in range(k, n):
                a[i][j] -= f * a[k][j]
    return True


def is_positive_semidefinite(m) -> bool:
    """Exact semidefiniteness test.

    A zero pivot is accepted only when its entire remaining row and column
    vanish; a negative pivot, or a zero pivot with a nonzero companion entry,
    certifies indefiniteness.
    """
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    for k in range(n):
        p = a[k][k]
        if p < 0:
            return False
        if p == 0:
            for j in range(k + 1, n):
                if a[k][j] != 0 or a[j][k] != 0:
                    return False
            continue
        for i in range(k + 1, n):
            if a[i][k] == 0:
                continue
            f = a[i][k] / p
            for j in range(k, n):
                a[i][j] -= f * a[k][j]
    return True


def ldl(m) -> tuple[list[Fraction], list[list[Fraction]]]:
    """Decompose a symmetric positive definite matrix into a sum of squares.

    Returns (d, u) with q(x) = sum_i d_i * (x_i + sum_{j>i} u[i][j]*x_j)^2.
    """
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    d: list[Fraction] = []
    u = [[Fraction(0)] * n for _ in range(n)]
    for k in range(n):
        p = a[k][k]
        if p <= 0:
            raise ValueError("matrix is not positive definite")
        d.append(p)
        for j in range(k + 1, n):
            u[k][j] = a[k][j] / p
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] -= a[k][i] * a[k][j] / p
    return d, u
