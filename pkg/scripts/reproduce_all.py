#!/usr/bin/env python3
"""Run every verification in the package over the full parameter grid.

Prints a section per theorem-level check with a one-line verdict, then a
combined summary; exits nonzero if anything fails.  This is the script-level
twin of the acceptance suite, for eyeballing rather than CI.
"""

from __future__ import annotations

import argparse
import sys

from plumb.families import (
    blowup_chain,
    bp_first_homology_order,
    cp_chain,
    framing,
    verify_blowup,
)
from plumb.graphs import chain_weights, intersection_matrix, invariants
from plumb.kirby import replay_embedding
from plumb.lattice import has_minus_one_class, is_negative_definite, vectors_of_norm
from plumb.lens import chain_boundary, lens_space


def section(title: str) -> None:
    print(f"\n== {title}")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--p-max", type=int, default=12)
    parser.add_argument("--m-min", type=int, default=-5)
    parser.add_argument("--m-max", type=int, default=5)
    args = parser.parse_args()
    grid = [(p, m) for p in range(2, args.p_max + 1) for m in range(args.m_min, args.m_max + 1)]
    ok = True

    section(f"ball boundaries: chain (-(p+2), -2, ..., -2) bounds L(p^2, p-1), p <= {args.p_max}")
    for p in range(2, args.p_max + 1):
        bd = chain_boundary(chain_weights(cp_chain(p)))
        good = bd == lens_space(p * p, p - 1) and bp_first_homology_order(p) ** 2 == bd.p
        ok &= good
        print(f"  p={p:<3} boundary {bd}   |H1|^2 = {bp_first_homology_order(p) ** 2:<5} {'ok' if good else 'MISMATCH'}")

    section("blow-up verification: determinant, boundary, bookkeeping")
    failures = [(p, m) for p, m in grid if not verify_blowup(p, m).passed]
    ok &= not failures
    print(f"  {len(grid) - len(failures)}/{len(grid)} grid points pass" + (f"; failing: {failures}" if failures else ""))

    section("handle-calculus replay: slide p times, cancel, read off the framing")
    bad = []
    for p, m in grid:
        report = replay_embedding(p, m)
        if not report.passed or report.trace[-1]["F"] != [[framing(p, m)]]:
            bad.append((p, m))
    ok &= not bad
    print(f"  {len(grid) - len(bad)}/{len(grid)} replays reach one (p^2 m - p - 1)-framed handle" + (f"; failing: {bad}" if bad else ""))

    section("(-1)-class obstruction by branch")
    counts = {"NoneByEvenness": 0, "NoneByEnumeration": 0, "Witness": 0, "Inconclusive": 0}
    for p, m in grid:
        kind = has_minus_one_class(blowup_chain(p, m)).kind
        counts[kind] += 1
        in_hypotheses = (p % 2 == 0 and m % 2 != 0) or m - 1 <= -2
        if kind == "Witness" and in_hypotheses:
            ok = False
            print(f"  witness inside the corollary hypotheses at (p, m) = ({p}, {m})")
    print("  " + ", ".join(f"{k}: {v}" for k, v in counts.items()))
    print("  (witnesses occur only at m = 0, where the chain ends in a -1 vertex)")
    for p, m in grid:
        if m - 1 <= -2:
            q = intersection_matrix(blowup_chain(p, m))
            if not (is_negative_definite(q) and vectors_of_norm(q, -1).kind == "NoneByEnumeration"):
                ok = False
                print(f"  definite branch FAILED at (p, m) = ({p}, {m})")

    section("signature bookkeeping on positive framings")
    rows = []
    for p, m in grid:
        f = framing(p, m)
        if f <= 0:
            continue
        inv = invariants(intersection_matrix(blowup_chain(p, m)))
        good = inv.b2_plus == 1 and inv.signature == 1 - (p - 1)
        ok &= good
        rows.append(good)
    print(f"  {sum(rows)}/{len(rows)} points keep b2+ = 1 with signature drop p-1")

    print(f"\n{'ALL CHECKS PASS' if ok else 'FAILURES PRESENT'}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
