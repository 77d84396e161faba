"""Exact linear algebra over the rationals.

Small dense systems only (rank <= 8 throughout the library), so plain
fraction-free-ish Gaussian elimination is entirely adequate.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list[Fraction]]


def _as_matrix(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def solve_exact(a: Sequence[Sequence], b: Sequence) -> tuple[Fraction, ...] | None:
    """Solve A x = b exactly.

    Returns one solution, or None if the system is inconsistent.  When the
    solution space is positive-dimensional the free variables are set to 0;
    all callers in this package only solve systems with independent columns,
    where the solution is unique.
    """
    m = _as_matrix(a)
    rhs = [Fraction(x) for x in b]
    nrows = len(m)
    if nrows == 0:
        return tuple()
    ncols = len(m[0])
    piv_cols: list[int] = []
    piv_r = 0
    for c in range(ncols):
        pivot = None
        for r in range(piv_r, nrows):
            if m[r][c] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        m[piv_r], m[pivot] = m[pivot], m[piv_r]
        rhs[piv_r], rhs[pivot] = rhs[pivot], rhs[piv_r]
        fp = m[piv_r][c]
        for r in range(nrows):
            if r == piv_r or m[r][c] == 0:
                continue
            f = m[r][c] / fp
            for cc in range(c, ncols):
                m[r][cc] -= f * m[piv_r][cc]
            rhs[r] -= f * rhs[piv_r]
        piv_cols.append(c)
        piv_r += 1
        if piv_r == nrows:
            break
    for r in range(piv_r, nrows):
        if rhs[r] != 0:
            return None
    sol = [Fraction(0)] * ncols
    for r, c in enumerate(piv_cols):
        sol[c] = rhs[r] / m[r][c]
    return tuple(sol)


def invert(a: Sequence[Sequence]) -> list[tuple[Fraction, ...]]:
    """Inverse of a square rational matrix."""
    n = len(a)
    m = _as_matrix(a)
    aug = [row + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        pivot = next((r for r in range(c, n) if aug[r][c] != 0), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        aug[c], aug[pivot] = aug[pivot], aug[c]
        fp = aug[c][c]
        aug[c] = [x / fp for x in aug[c]]
        for r in range(n):
            if r == c or aug[r][c] == 0:
                continue
            f = aug[r][c]
            aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [tuple(row[n:]) for row in aug]


def det(a: Sequence[Sequence]) -> Fraction:
    """Determinant by elimination, exact."""
    n = len(a)
    if n == 0:
        return Fraction(1)
    m = _as_matrix(a)
    sign = 1
    result = Fraction(1)
    for c in range(n):
        pivot = next((r for r in range(c, n) if m[r][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            sign = -sign
        result *= m[c][c]
        for r in range(c + 1, n):
            if m[r][c] == 0:
                continue
            f = m[r][c] / m[c][c]
            for cc in range(c, n):
                m[r][cc] -= f * m[c][cc]
    return sign * result


def in_cone(generators: Sequence[Sequence], target: Sequence) -> tuple[Fraction, ...] | None:
    """Express target as a combination of linearly independent generators.

    Returns the coefficient vector, or None when target is outside the span.
    Non-negativity is the caller's business.
    """
    if not generators:
        return tuple() if all(Fraction(x) == 0 for x in target) else None
    cols = list(zip(*generators))
    return solve_exact(cols, target)
