"""Exact integer and rational linear algebra on small dense matrices.

Everything operates on plain lists of Python ints (or Fractions), so results
are certificates rather than floating-point estimates.  Matrices in this
package stay tiny (n below ~20), so clarity wins over asymptotics.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

IntRows = Sequence[Sequence[int]]


def determinant(rows: IntRows) -> int:
    """Exact determinant of a square integer matrix (Bareiss elimination)."""
    n = len(rows)
    if n == 0:
        return 1
    a = [[int(x) for x in row] for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
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


def congruence_pivots(rows: IntRows) -> list[Fraction]:
    """Diagonal of a rational congruence diagonalization of a symmetric matrix.

    Performs U^T A U = D with det(U) = +-1, using symmetric pivoting; a zero
    diagonal block with a nonzero off-diagonal entry is repaired by a row+column
    addition before eliminating.  The returned pivots therefore satisfy:

      * product of pivots = det(A) exactly,
      * sign counts give the inertia (signature) of the form,
      * zero pivots count the radical (degenerate directions).
    """
    n = len(rows)
    a = [[Fraction(x) for x in row] for row in rows]
    pivots: list[Fraction] = []

    def swap(i: int, k: int) -> None:
        a[i], a[k] = a[k], a[i]
        for row in a:
            row[i], row[k] = row[k], row[i]

    def add_into(i: int, j: int) -> None:
        # row i += row j, then col i += col j: keeps the matrix symmetric.
        for c in range(n):
            a[i][c] += a[j][c]
        for r in range(n):
            a[r][i] += a[r][j]

    for k in range(n):
        if a[k][k] == 0:
            pick = next((i for i in range(k + 1, n) if a[i][i] != 0), None)
            if pick is not None:
                swap(k, pick)
            else:
                off = next(
                    ((i, j) for i in range(k, n) for j in range(i + 1, n) if a[i][j] != 0),
                    None,
                )
                if off is None:
                    pivots.extend(Fraction(0) for _ in range(k, n))
                    break
                i, j = off
                add_into(i, j)  # both diagonals vanish, so a[i][i] becomes 2*a[i][j]
                if i != k:
                    swap(k, i)
        d = a[k][k]
        for r in range(k + 1, n):
            if a[r][k] != 0:
                f = a[r][k] / d
                for c in range(n):
                    a[r][c] -= f * a[k][c]
                for rr in range(n):
                    a[rr][r] -= f * a[rr][k]
        pivots.append(d)
    return pivots


def leading_pivots(rows: IntRows) -> list[Fraction] | None:
    """Sequential LDL^T pivots of a symmetric matrix, or None if not positive definite.

    No pivoting is performed: the k-th pivot equals the ratio of consecutive
    leading principal minors, so the matrix is positive definite iff the sweep
    completes with every pivot positive.
    """
    n = len(rows)
    a = [[Fraction(x) for x in row] for row in rows]
    pivots: list[Fraction] = []
    for k in range(n):
        d = a[k][k]
        if d <= 0:
            return None
        pivots.append(d)
        # row elimination alone keeps the trailing Schur complement symmetric
        for i in range(k + 1, n):
            if a[i][k] != 0:
                f = a[i][k] / d
                for j in range(k, n):
                    a[i][j] -= f * a[k][j]
    return pivots


def ldl(rows: IntRows) -> tuple[list[Fraction], list[list[Fraction]]]:
    """LDL^T factorization data (d, L) of a positive-definite symmetric matrix.

    L is unit lower triangular; the caller is responsible for definiteness
    (use leading_pivots first).  Raises ValueError on a nonpositive pivot.
    """
    n = len(rows)
    a = [[Fraction(x) for x in row] for row in rows]
    lower = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    d: list[Fraction] = []
    for k in range(n):
        dk = a[k][k]
        if dk <= 0:
            raise ValueError("matrix is not positive definite")
        d.append(dk)
        for i in range(k + 1, n):
            f = a[i][k] / dk
            lower[i][k] = f
            for j in range(k, n):
                a[i][j] -= f * a[k][j]
    return d, lower


def smith_invariant_factors(rows: IntRows) -> list[int]:
    """Diagonal of the Smith normal form of an integer matrix.

    Returns min(m, n) nonnegative integers d_1 | d_2 | ... (zeros trail).
    """
    a = [[int(x) for x in row] for row in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    size = min(m, n)
    diag: list[int] = []

    def swap_rows(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]

    def swap_cols(i: int, j: int) -> None:
        for row in a:
            row[i], row[j] = row[j], row[i]

    t = 0
    while t < size:
        # locate a nonzero entry of minimal absolute value in the submatrix
        piv = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] != 0 and (piv is None or abs(a[i][j]) < abs(a[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])

        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, m):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    for j in range(t, n):
                        a[i][j] -= q * a[t][j]
                    if a[i][t] != 0:  # remainder is a smaller pivot
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, n):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    for i in range(t, m):
                        a[i][j] -= q * a[i][t]
                    if a[t][j] != 0:
                        swap_cols(t, j)
                        dirty = True
            if not dirty:
                # enforce divisibility: fold in any entry the pivot misses
                stop = False
                for i in range(t + 1, m):
                    for j in range(t + 1, n):
                        if a[i][j] % a[t][t] != 0:
                            for c in range(t, n):
                                a[t][c] += a[i][c]
                            dirty = True
                            stop = True
                            break
                    if stop:
                        break
        diag.append(abs(a[t][t]))
        t += 1

    diag.extend(0 for _ in range(size - len(diag)))
    return diag


def cokernel_invariants(rows: IntRows, generators: int) -> tuple[int, tuple[int, ...]]:
    """Invariants (free rank, torsion coefficients > 1) of Z^generators / row span.

    `rows` lists relation vectors of length `generators`.
    """
    if not rows:
        return generators, ()
    factors = smith_invariant_factors(rows)
    rank = sum(1 for d in factors if d != 0)
    torsion = tuple(d for d in factors if d > 1)
    return generators - rank, torsion
