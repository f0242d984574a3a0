"""Exact dense linear algebra over the rationals.

Only what the certificate machinery needs: row reduction, rank, and a
consistent-solution solver for small systems.  Matrices are lists of rows
of ``Fraction``.
"""

from __future__ import annotations

from fractions import Fraction

Matrix = list[list[Fraction]]


def rref(rows: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot column indices (exact)."""
    m = [list(map(Fraction, row)) for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                factor = m[i][c]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Matrix) -> int:
    return len(rref(rows)[1])


def solve_with_ranks(a: Matrix, b: list[Fraction]) -> tuple[list[Fraction] | None, int, int]:
    """Solve ``a @ x = b`` exactly.

    Returns ``(solution, rank(a), rank([a|b]))``; the solution is None when
    the system is inconsistent, otherwise one solution with free variables
    set to zero.
    """
    if not a:
        rank_aug = 1 if any(x != 0 for x in b) else 0
        return ([] if rank_aug == 0 else None), 0, rank_aug
    ncols = len(a[0])
    aug = [list(row) + [Fraction(bi)] for row, bi in zip(a, b)]
    reduced, pivots = rref(aug)
    rank_aug = len(pivots)
    if ncols in pivots:  # pivot in the constants column: inconsistent
        return None, rank_aug - 1, rank_aug
    x = [Fraction(0)] * ncols
    for row, c in zip(reduced, pivots):
        x[c] = row[-1]
    return x, rank_aug, rank_aug


def solve(a: Matrix, b: list[Fraction]) -> list[Fraction] | None:
    return solve_with_ranks(a, b)[0]
