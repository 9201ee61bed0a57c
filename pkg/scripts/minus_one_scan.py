#!/usr/bin/env python3
"""Scan the blow-up family for (-1)-classes and print the branch taken per point.

Legend: E = none by evenness, N = none by exhaustive enumeration,
W = witness found, ? = inconclusive (form is indefinite).
"""

from __future__ import annotations

import argparse

from plumb.families import blowup_chain
from plumb.lattice import has_minus_one_class

SYMBOL = {"NoneByEvenness": "E", "NoneByEnumeration": "N", "Witness": "W", "Inconclusive": "?"}


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--p-max", type=int, default=14)
    parser.add_argument("--m-min", type=int, default=-8)
    parser.add_argument("--m-max", type=int, default=8)
    args = parser.parse_args()

    ms = range(args.m_min, args.m_max + 1)
    print("p\\m " + " ".join(f"{m:>2}" for m in ms))
    for p in range(2, args.p_max + 1):
        cells = [SYMBOL[has_minus_one_class(blowup_chain(p, m)).kind] for m in ms]
        print(f"{p:<4}" + "  ".join(cells))


if __name__ == "__main__":
    main()
