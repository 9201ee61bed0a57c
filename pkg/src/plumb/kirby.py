"""Homology-level Kirby calculus: framed presentations, slides, cancellations.

A presentation keeps only the data visible to homology: the symmetric form on
the 2-handles (framings on the diagonal, linking numbers off it) and the
linking numbers of 2-handles with the dotted circles of 1-handles.  A handle
slide is then a unimodular congruence of the full block matrix

    [[form, linking], [linking^T, 0]],

so every move preserves the presented homology on the nose; this module
records the moves and the package's tests recheck the invariance via Smith
normal forms.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Any

from .exact import cokernel_invariants
from .graphs import SymIntMatrix
from .reports import VerificationReport, check


@dataclass(frozen=True)
class FramedPresentation:
    """1-handles, 2-handles, and their exact linking data.

    `form` is indexed by 2-handles (framings on the diagonal); `linking` has
    one row per 2-handle and one column per 1-handle.
    """

    one_handles: tuple[str, ...]
    two_handles: tuple[str, ...]
    form: SymIntMatrix
    linking: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.form.n != len(self.two_handles):
            raise ValueError("form dimension must match the number of 2-handles")
        if len(self.linking) != len(self.two_handles):
            raise ValueError("linking needs one row per 2-handle")
        for row in self.linking:
            if len(row) != len(self.one_handles):
                raise ValueError("linking rows must match the number of 1-handles")

    # -- moves ---------------------------------------------------------------

    def slide(self, i: int, j: int, c: int) -> "FramedPresentation":
        """Slide 2-handle i over 2-handle j, c times (c < 0 slides the other way).

        The class of handle i becomes [i] + c[j]: its framing picks up
        c^2 f(j) + 2c lk(i, j), its linking numbers pick up c times those of j.
        """
        if i == j:
            raise ValueError("cannot slide a handle over itself")
        n = len(self.two_handles)
        if not (0 <= i < n and 0 <= j < n):
            raise IndexError("2-handle index out of range")
        f = self.form.rows()
        f[i][i] += c * c * f[j][j] + 2 * c * f[i][j]
        for k in range(n):
            if k != i:
                f[i][k] += c * f[j][k]
                f[k][i] = f[i][k]
        linking = [list(row) for row in self.linking]
        for u in range(len(self.one_handles)):
            linking[i][u] += c * linking[j][u]
        return replace(
            self,
            form=SymIntMatrix.from_rows(f),
            linking=tuple(tuple(row) for row in linking),
        )

    def cancel(self, i: int, u: int) -> "FramedPresentation":
        """Cancel 2-handle i against 1-handle u; requires |lk(i, u)| = 1.

        Any other 2-handle still linking u is first slid over i with the unique
        coefficient clearing that linking number (framings update accordingly),
        then row i and column u are deleted.
        """
        n = len(self.two_handles)
        if not 0 <= i < n:
            raise IndexError("2-handle index out of range")
        if not 0 <= u < len(self.one_handles):
            raise IndexError("1-handle index out of range")
        pivot = self.linking[i][u]
        if abs(pivot) != 1:
            raise ValueError(
                f"cancellation requires linking number +-1, got {pivot} between "
                f"{self.two_handles[i]!r} and {self.one_handles[u]!r}"
            )
        pres = self
        for k in range(n):
            if k != i and pres.linking[k][u] != 0:
                pres = pres.slide(k, i, -pres.linking[k][u] * pivot)
        f = pres.form.rows()
        f = [[f[r][c] for c in range(n) if c != i] for r in range(n) if r != i]
        linking = [
            tuple(val for w, val in enumerate(row) if w != u)
            for k, row in enumerate(pres.linking)
            if k != i
        ]
        return FramedPresentation(
            one_handles=tuple(x for w, x in enumerate(self.one_handles) if w != u),
            two_handles=tuple(x for k, x in enumerate(self.two_handles) if k != i),
            form=SymIntMatrix.from_rows(f),
            linking=tuple(linking),
        )

    def blow_up(self, sign: int) -> "FramedPresentation":
        """Append an isolated (+-1)-framed 2-handle."""
        if sign not in (1, -1):
            raise ValueError("blow-up sign must be +1 or -1")
        n = len(self.two_handles)
        label = _fresh_label(self.two_handles)
        f = self.form.rows()
        for row in f:
            row.append(0)
        f.append([0] * n + [sign])
        return FramedPresentation(
            one_handles=self.one_handles,
            two_handles=self.two_handles + (label,),
            form=SymIntMatrix.from_rows(f),
            linking=self.linking + ((0,) * len(self.one_handles),),
        )

    def blow_down(self, i: int) -> "FramedPresentation":
        """Remove a (+-1)-framed 2-handle after sliding everything off it.

        The handle must not link any dotted circle; other 2-handles linking it
        are cleared by auto-slides (possible because the framing is a unit).
        """
        n = len(self.two_handles)
        if not 0 <= i < n:
            raise IndexError("2-handle index out of range")
        f_ii = self.form.entry(i, i)
        if f_ii not in (1, -1):
            raise ValueError(f"blow-down requires framing +-1, got {f_ii}")
        if any(self.linking[i]):
            raise ValueError("blow-down requires zero linking with every 1-handle")
        pres = self
        for k in range(n):
            if k != i and pres.form.entry(k, i) != 0:
                pres = pres.slide(k, i, -pres.form.entry(k, i) * f_ii)
        f = pres.form.rows()
        f = [[f[r][c] for c in range(n) if c != i] for r in range(n) if r != i]
        return FramedPresentation(
            one_handles=self.one_handles,
            two_handles=tuple(x for k, x in enumerate(self.two_handles) if k != i),
            form=SymIntMatrix.from_rows(f),
            linking=tuple(row for k, row in enumerate(pres.linking) if k != i),
        )

    # -- invariants ----------------------------------------------------------

    def block_matrix(self) -> list[list[int]]:
        """The full linking matrix [[form, linking], [linking^T, 0]]."""
        t = len(self.two_handles)
        o = len(self.one_handles)
        rows: list[list[int]] = []
        for i in range(t):
            rows.append(list(self.form.entries[i]) + list(self.linking[i]))
        for u in range(o):
            rows.append([self.linking[i][u] for i in range(t)] + [0] * o)
        return rows

    def first_homology(self) -> tuple[int, tuple[int, ...]]:
        """H1 of the 4-manifold: (free rank, torsion coefficients).

        Generators are the 1-handles; each 2-handle imposes the relation given
        by its row of linking numbers.
        """
        relations = [list(row) for row in self.linking if any(row)]
        return cokernel_invariants(relations, len(self.one_handles))

    def first_homology_order(self) -> int | None:
        """Order of H1 when finite, else None."""
        rank, torsion = self.first_homology()
        if rank > 0:
            return None
        order = 1
        for d in torsion:
            order *= d
        return order

    def to_dict(self) -> dict[str, Any]:
        return {
            "one_handles": list(self.one_handles),
            "two_handles": list(self.two_handles),
            "F": [list(row) for row in self.form.entries],
            "L": [list(row) for row in self.linking],
        }


def _fresh_label(taken: tuple[str, ...]) -> str:
    k = 1
    while f"e{k}" in taken:
        k += 1
    return f"e{k}"


def embedding_presentation(p: int, m: int) -> FramedPresentation:
    """Presentation of the (p, m) 2-handlebody with the rational ball visible.

    One dotted circle x and two 2-handles: a with framing p-1 (linking x
    p times) and b with framing m (linking x once, a negatively).  The
    sub-presentation (x; a) presents the ball's Z/p first homology, and the
    whole diagram presents a simply connected manifold.
    """
    if p < 2:
        raise ValueError(f"family parameter p must be >= 2, got {p}")
    return FramedPresentation(
        one_handles=("x",),
        two_handles=("a", "b"),
        form=SymIntMatrix.from_rows([[p - 1, -1], [-1, m]]),
        linking=((p,), (-1,)),
    )


def _trace_entry(move: str, args: dict[str, Any], pres: FramedPresentation) -> dict[str, Any]:
    state = pres.to_dict()
    return {"move": move, "args": args, "F": state["F"], "L": state["L"]}


def replay_embedding(p: int, m: int) -> VerificationReport:
    """Replay the simplification that trades the embedding diagram for one knot.

    Slides handle a over b p times (unlinking a from the dotted circle), then
    cancels b against the dotted circle; certifies that the framing identity
    held, that exactly one 2-handle of framing p^2 m - p - 1 remains, and that
    no 1-handles survive.  The move-by-move states are recorded as a trace.
    """
    start = embedding_presentation(p, m)
    f_a = start.form.entry(0, 0)
    f_b = start.form.entry(1, 1)
    lk_ab = start.form.entry(0, 1)

    slid = start.slide(0, 1, p)
    trace = [
        _trace_entry("slide", {"handle": "a", "over": "b", "coefficient": p}, slid)
    ]
    checks = [
        check(
            "slide-unlinks",
            slid.linking[0][0] == 0,
            f"lk(a, x) after the p-fold slide = {slid.linking[0][0]}",
        ),
        check(
            "framing-identity",
            slid.form.entry(0, 0) == f_a + p * p * f_b + 2 * p * lk_ab,
            f"new framing {slid.form.entry(0, 0)} vs "
            f"{f_a} + {p}^2*{f_b} + 2*{p}*{lk_ab}",
        ),
    ]

    final = slid.cancel(1, 0)
    trace.append(_trace_entry("cancel", {"handle": "b", "one_handle": "x"}, final))
    target = p * p * m - p - 1
    final_ok = (
        len(final.one_handles) == 0
        and len(final.two_handles) == 1
        and final.form.entries == ((target,),)
    )
    checks.append(
        check(
            "final-form",
            final_ok,
            f"final presentation: {len(final.one_handles)} 1-handles, "
            f"{len(final.two_handles)} 2-handles, form {final.form.entries}; "
            f"expected single 2-handle with framing {target}",
        )
    )
    return VerificationReport(p=p, m=m, checks=tuple(checks), trace=tuple(trace))
