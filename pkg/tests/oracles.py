"""Independent brute-force oracles used to pin expected values in the tests.

Everything here is deliberately naive (permanent-style determinant expansion,
exhaustive box scans) so it shares no code path with the package.
"""

from __future__ import annotations

from itertools import permutations, product


def brute_det(rows) -> int:
    """Determinant by signed permutation expansion; fine for n <= 8."""
    n = len(rows)
    if n == 0:
        return 1
    total = 0
    for perm in permutations(range(n)):
        sign = 1
        seen = [False] * n
        for start in range(n):
            if seen[start]:
                continue
            length = 0
            j = start
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
        term = sign
        for i in range(n):
            term *= rows[i][perm[i]]
        total += term
    return total


def leading_minors(rows) -> list[int]:
    """Leading principal minors D_1..D_n via brute_det."""
    n = len(rows)
    return [brute_det([row[:k] for row in rows[:k]]) for k in range(1, n + 1)]


def box_scan_norm_vectors(rows, target: int, radius: int) -> set[tuple[int, ...]]:
    """All nonzero v with |v_i| <= radius and v^T Q v == target, by full scan."""
    n = len(rows)
    hits: set[tuple[int, ...]] = set()
    for v in product(range(-radius, radius + 1), repeat=n):
        if not any(v):
            continue
        value = sum(v[i] * rows[i][j] * v[j] for i in range(n) for j in range(n))
        if value == target:
            hits.add(v)
    return hits


def box_scan_norm_vectors_fast(rows, target: int, radius: int) -> set[tuple[int, ...]]:
    """Vectorized variant of box_scan_norm_vectors for larger boxes (numpy)."""
    import numpy as np

    n = len(rows)
    q = np.asarray(rows, dtype=np.int64)
    side = np.arange(-radius, radius + 1, dtype=np.int64)
    grids = np.meshgrid(*([side] * n), indexing="ij")
    vs = np.stack([g.ravel() for g in grids], axis=1)
    values = np.einsum("vi,ij,vj->v", vs, q, vs)
    hits = vs[values == target]
    return {tuple(int(x) for x in v) for v in hits if any(v)}
