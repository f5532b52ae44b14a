"""Fraction-free (Bareiss) elimination over the integers.

Rational input rows are cleared of denominators first; scaling a row by a
nonzero integer changes neither the rank nor whether a determinant vanishes.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence


def _integer_rows(M: Sequence[Sequence]) -> list[list[int]]:
    rows = []
    for row in M:
        fr = [Fraction(x) for x in row]
        d = lcm(1, *(x.denominator for x in fr))
        rows.append([int(x * d) for x in fr])
    return rows


def exact_rank(M: Sequence[Sequence]) -> int:
    """Rank over the rationals of a matrix of ints or Fractions."""
    A = _integer_rows(M)
    if not A:
        return 0
    ncols = len(A[0])
    if any(len(row) != ncols for row in A):
        raise ValueError("ragged matrix")
    nrows = len(A)
    rank = 0
    prev = 1
    for c in range(ncols):
        pivot = next((r for r in range(rank, nrows) if A[r][c]), None)
        if pivot is None:
            continue
        A[rank], A[pivot] = A[pivot], A[rank]
        p = A[rank][c]
        prow = A[rank]
        for r in range(rank + 1, nrows):
            row = A[r]
            f = row[c]
            for j in range(c + 1, ncols):
                row[j] = (p * row[j] - f * prow[j]) // prev
            row[c] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def determinant(M: Sequence[Sequence]) -> Fraction:
    """Exact determinant of a square matrix of ints or Fractions."""
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    A = []
    for row in M:
        fr = [Fraction(x) for x in row]
        d = lcm(1, *(x.denominator for x in fr))
        scale /= d
        A.append([int(x * d) for x in fr])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if A[r][k]), None)
            if swap is None:
                return Fraction(0)
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[k][k] * A[i][j] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1] * scale


def nullspace(M: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of ``{x : M x = 0}`` over the rationals (reduced row echelon form)."""
    A = [[Fraction(x) for x in row] for row in M]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if pivot is None:
            continue
        A[r], A[pivot] = A[pivot], A[r]
        p = A[r][c]
        A[r] = [x / p for x in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for i, c in enumerate(pivots):
            x[c] = -A[i][f]
        basis.append(x)
    return basis
