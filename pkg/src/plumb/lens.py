"""Negative continued fractions and lens-space boundary arithmetic.

A linear plumbing with weights e_1..e_n bounds the lens space whose
parameters come from the negative (Hirzebruch-Jung) continued fraction
[-e_1, ..., -e_n].  The evaluation here uses the division-free continuant
recursion, so chains with zero or positive weights are handled uniformly;
degenerations surface as |P| = 1 (S^3) or P = 0 (S^1 x S^2).

Orientation convention, fixed once for the whole package: the boundary of a
linear chain is Lens(P, Q) for (P, Q) = neg_cf_eval(-e_1, ..., -e_n); when
P < 0 the pair is normalized by (P, Q) -> (-P, -Q), which is the reversed
orientation of Lens(-P, Q).  Under this convention the chain
(-(p+2), -2, ..., -2) bounds exactly Lens(p^2, p-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Any, Literal, Sequence

ContinuedFraction = Sequence[int]


@dataclass(frozen=True)
class Boundary3Manifold:
    """Oriented boundary of a linear plumbing: a lens space, S^3, or S^1 x S^2."""

    kind: Literal["lens", "s3", "s1xs2"]
    p: int = 0
    q: int = 0

    def __post_init__(self) -> None:
        if self.kind == "lens":
            if self.p < 2:
                raise ValueError("lens parameters must satisfy p >= 2 (use S3 for p = 1)")
            if not 0 <= self.q < self.p:
                raise ValueError("lens parameters must satisfy 0 <= q < p")
            if gcd(self.p, self.q) != 1:
                raise ValueError(f"lens parameters must be coprime, got ({self.p},{self.q})")
        elif self.p != 0 or self.q != 0:
            raise ValueError(f"{self.kind} carries no (p, q) parameters")

    def __str__(self) -> str:
        if self.kind == "lens":
            return f"L({self.p},{self.q})"
        return "S3" if self.kind == "s3" else "S1xS2"

    def to_dict(self) -> dict[str, Any]:
        if self.kind == "lens":
            return {"kind": "lens", "p": self.p, "q": self.q}
        return {"kind": self.kind}


S3 = Boundary3Manifold("s3")
S1XS2 = Boundary3Manifold("s1xs2")


def lens_space(p: int, q: int) -> Boundary3Manifold:
    """Normalized lens space; degenerate parameters map to S3 / S1xS2.

    Rules: p = 0 gives S1xS2 (q must be a unit), |p| = 1 gives S3, negative p
    flips both signs, and finally q is reduced mod p.
    """
    if p == 0:
        if abs(q) != 1:
            raise ValueError("p = 0 requires q = +-1")
        return S1XS2
    if p < 0:
        p, q = -p, -q
    if p == 1:
        return S3
    return Boundary3Manifold("lens", p, q % p)


def neg_cf_eval(terms: ContinuedFraction) -> tuple[int, int]:
    """Evaluate the negative continued fraction [x_1, ..., x_n] as a pair (P, Q).

    P is the continuant of the full list, Q that of the tail [x_2..x_n];
    computed as a product of the matrices [[x, -1], [1, 0]], so intermediate
    zero denominators need no special handling.  The pair is always coprime;
    the empty list gives (1, 0).
    """
    a, b = 1, 0  # top row of the running matrix product
    c, d = 0, 1  # bottom row
    for x in terms:
        a, b = x * a + b, -a
        c, d = x * c + d, -c
    return a, c


def hj_expand(p: int, q: int) -> list[int]:
    """Hirzebruch-Jung expansion of p/q: the unique terms >= 2 with neg_cf_eval = (p, q).

    Requires 0 < q < p and gcd(p, q) = 1.
    """
    if not 0 < q < p:
        raise ValueError(f"expansion requires 0 < q < p, got ({p},{q})")
    if gcd(p, q) != 1:
        raise ValueError(f"expansion requires coprime (p, q), got ({p},{q})")
    terms: list[int] = []
    while q > 0:
        x = -(-p // q)  # ceil(p / q)
        terms.append(x)
        p, q = q, x * q - p
    return terms


def chain_boundary(weights: Sequence[int]) -> Boundary3Manifold:
    """Oriented boundary of the linear plumbing with the given weight list.

    |P| always equals |det| of the chain's intersection matrix, so |P| = 1
    yields S^3 and P = 0 yields S^1 x S^2.
    """
    p, q = neg_cf_eval([-e for e in weights])
    if p == 0:
        return S1XS2
    return lens_space(p, q)


def lens_reverse(b: Boundary3Manifold) -> Boundary3Manifold:
    """Orientation reversal: -L(p, q) = L(p, p - q); S^3 and S^1 x S^2 are fixed."""
    if b.kind != "lens":
        return b
    return Boundary3Manifold("lens", b.p, (b.p - b.q) % b.p)


def lens_equiv(a: Boundary3Manifold, b: Boundary3Manifold, oriented: bool = True) -> bool:
    """Classical homeomorphism test.

    Oriented: L(p, q) = L(p, q') iff q' = q or q q' = 1 (mod p).  Unoriented
    additionally allows q' = -q or q q' = -1 (mod p).  Different union tags are
    never equivalent; S^3 and S^1 x S^2 admit orientation-reversing self-maps,
    so the flag is irrelevant for them.
    """
    if a.kind != b.kind:
        return False
    if a.kind != "lens":
        return True
    if a.p != b.p:
        return False
    p, q, r = a.p, a.q, b.q
    if r == q % p or (q * r) % p == 1 % p:
        return True
    if not oriented:
        if r == (-q) % p or (q * r) % p == (-1) % p:
            return True
    return False
