"""Command-line front end.

Subcommands mirror the package API: `invariants` and `boundary` consume a
graph JSON document (stdin or --file), `family` emits the parametric objects,
`lattice` runs the obstruction checks, `replay thm1-2` replays the handle
calculus, and `verify` runs theorem certification over (p, m) grids.

Exit codes: 0 all requested checks pass, 1 a check failed (or an obstruction
witness was found), 2 usage error (bad flags, missing file, malformed input).
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence

from .families import (
    blowup_chain,
    cp_chain,
    handlebody_boundary,
    handlebody_model,
    verify_blowup,
)
from .graphs import PlumbingGraph, chain_weights, intersection_matrix, invariants, parse_graph
from .kirby import replay_embedding
from .lattice import enumerate_norm_vectors, has_minus_one_class, is_even, is_negative_definite, vectors_of_norm
from .lens import chain_boundary
from .reports import VerificationReport, check, skipped


class UsageError(Exception):
    """Bad input from the command line: reported on stderr, exit code 2."""


@dataclass(frozen=True)
class RunConfig:
    """Parsed invocation; `command` selects the handler."""

    command: str
    input_path: Path | None = None
    p: int | None = None
    m: int | None = None
    p_max: int | None = None
    m_min: int | None = None
    m_max: int | None = None
    format: str = "table"
    parallel: bool = False
    norm: int = -2


def _load_graph(config: RunConfig) -> PlumbingGraph:
    if config.input_path is not None:
        try:
            text = config.input_path.read_text()
        except OSError as e:
            raise UsageError(f"cannot read {config.input_path}: {e}") from e
    else:
        text = sys.stdin.read()
    try:
        return parse_graph(text)
    except ValueError as e:
        raise UsageError(f"malformed graph document: {e}") from e


def _family_graph(config: RunConfig) -> PlumbingGraph:
    if config.input_path is not None:
        return _load_graph(config)
    if config.p is None or config.m is None:
        raise UsageError("provide --file, or --p and --m to use the blow-up family")
    try:
        return blowup_chain(config.p, config.m)
    except ValueError as e:
        raise UsageError(str(e)) from e


def _require_point(config: RunConfig) -> tuple[int, int]:
    if config.p is None or config.m is None:
        raise UsageError("this command needs --p and --m")
    return config.p, config.m


def _grid(config: RunConfig, default_p_max: int, default_m_min: int, default_m_max: int) -> list[tuple[int, int]]:
    if config.p is not None:
        if config.m is None:
            raise UsageError("a single-point run needs both --p and --m")
        if config.p < 2:
            raise UsageError(f"--p must be >= 2, got {config.p}")
        return [(config.p, config.m)]
    p_max = config.p_max if config.p_max is not None else default_p_max
    m_min = config.m_min if config.m_min is not None else default_m_min
    m_max = config.m_max if config.m_max is not None else default_m_max
    if p_max < 2:
        raise UsageError(f"--p-max must be >= 2, got {p_max}")
    if m_min > m_max:
        raise UsageError(f"--m-min {m_min} exceeds --m-max {m_max}")
    return [(p, m) for p in range(2, p_max + 1) for m in range(m_min, m_max + 1)]


def _map_grid(
    worker: Callable[[tuple[int, int]], VerificationReport],
    points: Sequence[tuple[int, int]],
    parallel: bool,
) -> list[VerificationReport]:
    if parallel and len(points) > 1:
        with ProcessPoolExecutor() as pool:
            return list(pool.map(worker, points))
    return [worker(pt) for pt in points]


def _blowup_worker(point: tuple[int, int]) -> VerificationReport:
    return verify_blowup(*point)


def _cor15_worker(point: tuple[int, int]) -> VerificationReport:
    """Check the no-(-1)-class corollary at one grid point.

    The even branch applies when p is even and m odd; the definite branch
    whenever m - 1 <= -2.  Points outside both hypotheses are skipped.
    """
    p, m = point
    checks = []
    even_branch = p % 2 == 0 and m % 2 != 0
    definite_branch = m - 1 <= -2
    if even_branch:
        res = has_minus_one_class(blowup_chain(p, m))
        checks.append(
            check("even-branch", res.kind == "NoneByEvenness", f"dispatch returned {res.kind}")
        )
    if definite_branch:
        q = intersection_matrix(blowup_chain(p, m))
        cert = is_negative_definite(q)
        res = vectors_of_norm(q, -1)
        pivots = ", ".join(str(d) for d in (res.certificate or cert.pivots or ()))
        checks.append(
            check(
                "definite-enumeration",
                bool(cert) and res.kind == "NoneByEnumeration",
                f"negative definite = {bool(cert)}, enumeration returned {res.kind}; "
                f"pivot certificate [{pivots}]",
            )
        )
    if not checks:
        checks.append(skipped("minus-one-class", "outside both hypothesis branches"))
    return VerificationReport(p=p, m=m, checks=tuple(checks))


def _print_reports(reports: list[VerificationReport], config: RunConfig) -> None:
    if config.format == "json":
        print(json.dumps([r.to_dict() for r in reports], indent=2))
        return
    widths = (4, 4, 22, 8)
    print(f"{'p':<{widths[0]}}{'m':<{widths[1]}}{'check':<{widths[2]}}{'status':<{widths[3]}}details")
    for r in reports:
        for c in r.checks:
            print(f"{r.p:<{widths[0]}}{r.m:<{widths[1]}}{c.name:<{widths[2]}}{c.status:<{widths[3]}}{c.details}")


def _cmd_invariants(config: RunConfig) -> int:
    report = invariants(intersection_matrix(_load_graph(config)))
    if config.format == "json":
        print(json.dumps(report.to_dict(), indent=2))
    else:
        for key, value in report.to_dict().items():
            print(f"{key:<14}{value}")
    return 0


def _cmd_boundary(config: RunConfig) -> int:
    g = _load_graph(config)
    try:
        weights = chain_weights(g)
    except ValueError as e:
        raise UsageError(str(e)) from e
    b = chain_boundary(weights)
    if config.format == "json":
        print(json.dumps(b.to_dict(), indent=2))
    else:
        print(b)
    return 0


def _cmd_family_cp(config: RunConfig) -> int:
    if config.p is None:
        raise UsageError("family cp needs --p")
    try:
        g = cp_chain(config.p)
    except ValueError as e:
        raise UsageError(str(e)) from e
    print(json.dumps(g.to_dict()))
    return 0


def _cmd_family_blowup(config: RunConfig) -> int:
    p, m = _require_point(config)
    try:
        g = blowup_chain(p, m)
    except ValueError as e:
        raise UsageError(str(e)) from e
    print(json.dumps(g.to_dict()))
    return 0


def _cmd_family_mpm(config: RunConfig) -> int:
    p, m = _require_point(config)
    try:
        model = handlebody_model(p, m)
        boundary = handlebody_boundary(p, m)
    except ValueError as e:
        raise UsageError(str(e)) from e
    if config.format == "json":
        doc = model.to_dict()
        doc["p"] = p
        doc["m"] = m
        doc["boundary"] = boundary.to_dict()
        print(json.dumps(doc, indent=2))
    else:
        print(f"2-handlebody: one 2-handle on {model.knot}, framing {model.framing}, boundary {boundary}")
    return 0


def _cmd_lattice_minus_one(config: RunConfig) -> int:
    g = _family_graph(config)
    res = has_minus_one_class(g)
    if config.format == "json":
        print(json.dumps(res.to_dict(), indent=2))
    else:
        print(res)
    return 0 if res.kind in ("NoneByEvenness", "NoneByEnumeration") else 1


def _cmd_lattice_roots(config: RunConfig) -> int:
    g = _family_graph(config)
    q = intersection_matrix(g)
    if not is_negative_definite(q):
        if config.format == "json":
            print(json.dumps({"result": "Inconclusive", "reason": "form is not negative definite"}, indent=2))
        else:
            print("Inconclusive: form is not negative definite")
        return 1
    vectors = enumerate_norm_vectors(q, config.norm)
    if config.format == "json":
        print(json.dumps({"norm": config.norm, "count": len(vectors), "vectors": [list(v) for v in vectors]}, indent=2))
    else:
        print(f"{len(vectors)} vectors of norm {config.norm}")
        for v in vectors:
            print(" ".join(str(x) for x in v))
    return 0


def _cmd_replay(config: RunConfig) -> int:
    p, m = _require_point(config)
    try:
        report = replay_embedding(p, m)
    except ValueError as e:
        raise UsageError(str(e)) from e
    if config.format == "json":
        print(json.dumps(report.to_dict(), indent=2))
    else:
        for entry in report.trace or ():
            print(f"{entry['move']:<8}{entry['args']}  F={entry['F']}  L={entry['L']}")
        for c in report.checks:
            print(f"{c.name:<18}{c.status:<8}{c.details}")
    return 0 if report.passed else 1


def _cmd_verify_blowup(config: RunConfig) -> int:
    points = _grid(config, default_p_max=12, default_m_min=-5, default_m_max=5)
    reports = _map_grid(_blowup_worker, points, config.parallel)
    _print_reports(reports, config)
    return 0 if all(r.passed for r in reports) else 1


def _cmd_verify_cor15(config: RunConfig) -> int:
    points = _grid(config, default_p_max=10, default_m_min=-5, default_m_max=5)
    reports = _map_grid(_cor15_worker, points, config.parallel)
    _print_reports(reports, config)
    return 0 if all(r.passed for r in reports) else 1


_HANDLERS: dict[str, Callable[[RunConfig], int]] = {
    "invariants": _cmd_invariants,
    "boundary": _cmd_boundary,
    "family-cp": _cmd_family_cp,
    "family-blowup": _cmd_family_blowup,
    "family-mpm": _cmd_family_mpm,
    "lattice-minus-one": _cmd_lattice_minus_one,
    "lattice-roots": _cmd_lattice_roots,
    "replay-thm1-2": _cmd_replay,
    "verify-blowup": _cmd_verify_blowup,
    "verify-cor1-5": _cmd_verify_cor15,
}


def run(config: RunConfig) -> int:
    handler = _HANDLERS.get(config.command)
    if handler is None:
        print(f"error: unknown command {config.command!r}", file=sys.stderr)
        return 2
    try:
        return handler(config)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ValueError as e:
        # domain validation (bad parameters, non-chain graph, ...) is a usage error
        print(f"error: {e}", file=sys.stderr)
        return 2


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("table", "json"), default="table")


def _add_point(parser: argparse.ArgumentParser, require_m: bool = True) -> None:
    parser.add_argument("--p", type=int)
    if require_m:
        parser.add_argument("--m", type=int)


def _add_grid(parser: argparse.ArgumentParser) -> None:
    _add_point(parser)
    parser.add_argument("--p-max", type=int, dest="p_max")
    parser.add_argument("--m-min", type=int, dest="m_min")
    parser.add_argument("--m-max", type=int, dest="m_max")
    parser.add_argument("--parallel", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plumb",
        description="Exact calculator for linear plumbings, lens-space boundaries, and rational blow-down surgery bookkeeping.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_inv = sub.add_parser("invariants", help="invariants of a graph's intersection form")
    p_inv.add_argument("--file", type=Path)
    _add_format(p_inv)

    p_bd = sub.add_parser("boundary", help="boundary 3-manifold of a linear-chain graph")
    p_bd.add_argument("--file", type=Path)
    _add_format(p_bd)

    p_fam = sub.add_parser("family", help="construct the parametric families")
    fam_sub = p_fam.add_subparsers(dest="family", required=True)
    f_cp = fam_sub.add_parser("cp", help="negative-definite chain (-(p+2), -2, ..., -2)")
    f_cp.add_argument("--p", type=int, required=True)
    f_bl = fam_sub.add_parser("blowup", help="chain (-(p+2), -2, ..., -2, m-1)")
    f_bl.add_argument("--p", type=int, required=True)
    f_bl.add_argument("--m", type=int, required=True)
    f_m = fam_sub.add_parser("mpm", help="2-handlebody on the family knot")
    f_m.add_argument("--p", type=int, required=True)
    f_m.add_argument("--m", type=int, required=True)
    _add_format(f_m)

    p_lat = sub.add_parser("lattice", help="lattice obstruction checks")
    lat_sub = p_lat.add_subparsers(dest="lattice", required=True)
    l_m1 = lat_sub.add_parser("minus-one", help="search for a class of square -1")
    l_m1.add_argument("--file", type=Path)
    _add_point(l_m1)
    _add_format(l_m1)
    l_rt = lat_sub.add_parser("roots", help="enumerate all vectors of a given norm")
    l_rt.add_argument("--file", type=Path)
    _add_point(l_rt)
    l_rt.add_argument("--norm", type=int, default=-2)
    _add_format(l_rt)

    p_rp = sub.add_parser("replay", help="replay handle-calculus proofs")
    rp_sub = p_rp.add_subparsers(dest="replay", required=True)
    r_emb = rp_sub.add_parser("thm1-2", help="slide-and-cancel reduction to a single framed knot")
    r_emb.add_argument("--p", type=int, required=True)
    r_emb.add_argument("--m", type=int, required=True)
    _add_format(r_emb)

    p_vf = sub.add_parser("verify", help="grid verification of the surgery identities")
    vf_sub = p_vf.add_subparsers(dest="verify", required=True)
    v_bl = vf_sub.add_parser("blowup", help="determinant/boundary/bookkeeping checks")
    _add_grid(v_bl)
    _add_format(v_bl)
    v_c5 = vf_sub.add_parser("cor1-5", help="no-(-1)-class checks on the blow-up family")
    _add_grid(v_c5)
    _add_format(v_c5)

    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    command = args.command
    for group in ("family", "lattice", "replay", "verify"):
        if getattr(args, group, None):
            command = f"{command}-{getattr(args, group)}"
    return RunConfig(
        command=command,
        input_path=getattr(args, "file", None),
        p=getattr(args, "p", None),
        m=getattr(args, "m", None),
        p_max=getattr(args, "p_max", None),
        m_min=getattr(args, "m_min", None),
        m_max=getattr(args, "m_max", None),
        format=getattr(args, "format", "table"),
        parallel=getattr(args, "parallel", False),
        norm=getattr(args, "norm", -2),
    )


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return run(config_from_args(args))


if __name__ == "__main__":
    sys.exit(main())
