"""Exact linear algebra over the rationals (and other exact fields).

Matrices are lists of lists.  Everything here is small (dimensions at most
8, systems at most a few dozen rows), so plain Gaussian elimination with
Fraction arithmetic is both exact and fast enough.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

Vector = List[Fraction]
Matrix = List[List[Fraction]]


def frac_rows(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def zeros(n: int, m: int, zero=Fraction(0)) -> Matrix:
    return [[zero for _ in range(m)] for _ in range(n)]


def identity(n: int, one=Fraction(1), zero=Fraction(0)) -> Matrix:
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]):
    n, k, m = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = a[i][0] * b[0][j]
            for t in range(1, k):
                acc = acc + a[i][t] * b[t][j]
            row.append(acc)
        out.append(row)
    return out


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, s):
    return [[x * s for x in row] for row in a]


def transpose(a):
    return [list(col) for col in zip(*a)]


def rref(rows: Sequence[Sequence[Fraction]]) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form; returns (rref rows, pivot column list).

    Leading entries are normalized to 1; zero rows are kept at the bottom.
    Works over any exact field whose elements support the arithmetic
    operators and truthiness for zero tests.
    """
    m = [list(row) for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: List[int] = []
    r = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(r, len(m)):
            if m[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = m[r][col] ** -1
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                factor = m[i][col]
                m[i] = [x - factor * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    _, pivots = rref(rows)
    return len(pivots)


def row_space_basis(rows: Sequence[Sequence[Fraction]]) -> Matrix:
    red, pivots = rref(rows)
    return [red[i] for i in range(len(pivots))]


def solve(a: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> Optional[Vector]:
    """One solution of a x = b, or None if inconsistent.

    Free variables are set to zero.
    """
    n = len(a)
    ncols = len(a[0]) if n else 0
    aug = [list(row) + [b[i]] for i, row in enumerate(a)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    zero = a[0][0] * 0 if n and ncols else Fraction(0)
    x = [zero for _ in range(ncols)]
    for i, col in enumerate(pivots):
        x[col] = red[i][ncols]
    return x


def nullspace(rows: Sequence[Sequence[Fraction]]) -> Matrix:
    """Basis of the right kernel."""
    if not rows:
        return []
    ncols = len(rows[0])
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, col in enumerate(pivots):
            v[col] = -red[i][f]
        basis.append(v)
    return basis


def inverse(a: Sequence[Sequence]) -> Matrix:
    n = len(a)
    zero = a[0][0] * 0
    one = zero + 1
    aug = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(a)]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in red]


def det(a: Sequence[Sequence]) -> Fraction:
    m = [list(row) for row in a]
    n = len(m)
    sign = 1
    result = None
    for col in range(n):
        pivot = None
        for i in range(col, n):
            if m[i][col]:
                pivot = i
                break
        if pivot is None:
            return m[0][0] - m[0][0]
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            sign = -sign
        for i in range(col + 1, n):
            if m[i][col]:
                factor = m[i][col] / m[col][col]
                m[i] = [x - factor * y for x, y in zip(m[i], m[col])]
    prod = m[0][0]
    for i in range(1, n):
        prod = prod * m[i][i]
    return prod * sign if sign == 1 else -prod
