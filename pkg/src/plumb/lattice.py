"""Exact obstruction checks on integer lattices: parity, definiteness, norm search.

The search for vectors of a given negative norm works on negative-definite
forms only, where the LDL^T pivots of the negated form give hard per-coordinate
bounds: writing -v^T Q v = sum_i d_i (v_i + c_i)^2 with all d_i > 0, any
solution of norm `target` satisfies d_i (v_i + c_i)^2 <= -target level by
level, so the recursive scan over those integer windows is exhaustive.  All
bounds are computed and compared in exact rational arithmetic; the pivot list
is returned as the exhaustiveness certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Literal

from .exact import ldl, leading_pivots
from .graphs import PlumbingGraph, SymIntMatrix, intersection_matrix

ResultKind = Literal["NoneByEvenness", "NoneByEnumeration", "Witness", "Inconclusive"]


@dataclass(frozen=True)
class DefinitenessCertificate:
    """Outcome of the exact negative-definiteness test.

    When `definite` holds, `pivots` are the sequential LDL pivots of -Q, all
    positive; they double as the exhaustiveness certificate for norm searches.
    """

    definite: bool
    pivots: tuple[Fraction, ...] = ()

    def __bool__(self) -> bool:
        return self.definite


@dataclass(frozen=True)
class NormSearchResult:
    kind: ResultKind
    witness: tuple[int, ...] | None = None
    certificate: tuple[Fraction, ...] | None = None
    reason: str | None = None

    def __str__(self) -> str:
        if self.kind == "Witness":
            return f"Witness {list(self.witness or ())}"
        if self.kind == "Inconclusive":
            return f"Inconclusive: {self.reason}"
        return self.kind

    def to_dict(self) -> dict[str, Any]:
        doc: dict[str, Any] = {"result": self.kind}
        if self.witness is not None:
            doc["witness"] = list(self.witness)
        if self.certificate is not None:
            doc["certificate"] = {"pivots": [str(d) for d in self.certificate]}
        if self.reason is not None:
            doc["reason"] = self.reason
        return doc


def is_even(q: SymIntMatrix) -> bool:
    """True iff every diagonal entry is even (equivalently v.Qv is even for all v)."""
    return all(d % 2 == 0 for d in q.diagonal())


def is_negative_definite(q: SymIntMatrix) -> DefinitenessCertificate:
    """Exact test that -Q is positive definite, with the pivot certificate.

    The empty form counts as definite (vacuously).
    """
    negated = [[-x for x in row] for row in q.rows()]
    pivots = leading_pivots(negated)
    if pivots is None:
        return DefinitenessCertificate(False)
    return DefinitenessCertificate(True, tuple(pivots))


def _integer_window(c: Fraction, bound: Fraction) -> range:
    """All integers x with (x + c)^2 <= bound, as a range (possibly empty).

    Walks outward from the integer nearest -c, so only exact comparisons are
    used; the window is empty iff even that integer misses the bound.
    """
    if bound < 0:
        return range(0)
    center = round(-c)
    if (center + c) * (center + c) > bound:
        return range(0)
    hi = center
    while (hi + 1 + c) * (hi + 1 + c) <= bound:
        hi += 1
    lo = center
    while (lo - 1 + c) * (lo - 1 + c) <= bound:
        lo -= 1
    return range(lo, hi + 1)


def enumerate_norm_vectors(q: SymIntMatrix, target: int) -> list[tuple[int, ...]]:
    """All integer vectors v with v^T Q v = target, for negative-definite Q.

    Returns both v and -v, sorted lexicographically.  Raises ValueError when Q
    is not negative definite; returns [] for target >= 0 (a definite form takes
    no nonnegative value on a nonzero vector).
    """
    cert = is_negative_definite(q)
    if not cert:
        raise ValueError("norm enumeration requires a negative-definite form")
    if target >= 0 or q.n == 0:
        return []
    goal = Fraction(-target)
    d, lower = ldl([[-x for x in row] for row in q.rows()])
    n = q.n
    coords = [0] * n
    found: list[tuple[int, ...]] = []

    def scan(i: int, remaining: Fraction) -> None:
        if i < 0:
            if remaining == 0:
                found.append(tuple(coords))
            return
        shift = sum((lower[j][i] * coords[j] for j in range(i + 1, n)), Fraction(0))
        for x in _integer_window(shift, remaining / d[i]):
            coords[i] = x
            spent = d[i] * (x + shift) * (x + shift)
            scan(i - 1, remaining - spent)
        coords[i] = 0

    scan(n - 1, goal)
    found = [v for v in found if any(v)]
    found.sort()
    return found


def vectors_of_norm(q: SymIntMatrix, target: int) -> NormSearchResult:
    """Definitive norm search on a negative-definite form.

    Returns Witness(v) for the lexicographically first solution, or
    NoneByEnumeration carrying the pivot certificate that the scanned region
    was exhaustive.  Forms that are not negative definite yield Inconclusive.
    """
    cert = is_negative_definite(q)
    if not cert:
        return NormSearchResult("Inconclusive", reason="form is indefinite or degenerate (or positive)")
    solutions = enumerate_norm_vectors(q, target)
    if solutions:
        return NormSearchResult("Witness", witness=solutions[0], certificate=cert.pivots)
    return NormSearchResult("NoneByEnumeration", certificate=cert.pivots)


def has_minus_one_class(g: PlumbingGraph) -> NormSearchResult:
    """Decide whether the plumbing's lattice contains a vector of square -1.

    Dispatch: an even form hosts no odd-square vector at all; a negative
    definite form is searched exhaustively; anything else is Inconclusive.
    """
    q = intersection_matrix(g)
    if is_even(q):
        return NormSearchResult("NoneByEvenness")
    if is_negative_definite(q):
        return vectors_of_norm(q, -1)
    return NormSearchResult("Inconclusive", reason="form is indefinite or degenerate (or positive)")
