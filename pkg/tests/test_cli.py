"""Command-line interface: subcommands, exit codes, schema, determinism."""

from __future__ import annotations

import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from plumb.cli import RunConfig, build_parser, config_from_args, main, run

SCHEMA = json.loads((Path(__file__).resolve().parents[1] / "docs" / "report.schema.json").read_text())


def run_cli(args, stdin_text=None):
    proc = subprocess.run(
        [sys.executable, "-m", "plumb", *args],
        input=stdin_text,
        capture_output=True,
        text=True,
    )
    return proc


def invoke(capsys, *args):
    code = main(list(args))
    out = capsys.readouterr().out
    return code, out


# -- pipeline and basic subcommands --------------------------------------------

def test_family_cp_pipes_into_boundary():
    graph = run_cli(["family", "cp", "--p", "3"])
    assert graph.returncode == 0
    boundary = run_cli(["boundary"], stdin_text=graph.stdout)
    assert boundary.returncode == 0
    assert boundary.stdout.strip() == "L(9,2)"


def test_boundary_from_file(tmp_path, capsys):
    doc = {"vertices": [{"id": 0, "weight": -4}, {"id": 1, "weight": 0}], "edges": [[0, 1]]}
    path = tmp_path / "graph.json"
    path.write_text(json.dumps(doc))
    code, out = invoke(capsys, "boundary", "--file", str(path))
    assert code == 0
    assert out.strip() == "S3"
    code, out = invoke(capsys, "boundary", "--file", str(path), "--format", "json")
    assert code == 0
    assert json.loads(out) == {"kind": "s3"}


def test_invariants_json_mirrors_report_fields(tmp_path, capsys):
    doc = {"vertices": [{"id": 0, "weight": -5}, {"id": 1, "weight": -2}], "edges": [[0, 1]]}
    path = tmp_path / "graph.json"
    path.write_text(json.dumps(doc))
    code, out = invoke(capsys, "invariants", "--file", str(path), "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report == {
        "b2": 2,
        "determinant": 9,
        "signature": -2,
        "b2_plus": 0,
        "b2_minus": 2,
        "b2_zero": 0,
        "euler": 3,
        "definiteness": "negative-definite",
        "parity": "odd",
    }


def test_family_blowup_and_mpm(capsys):
    code, out = invoke(capsys, "family", "blowup", "--p", "3", "--m", "1")
    assert code == 0
    doc = json.loads(out)
    assert [v["weight"] for v in doc["vertices"]] == [-5, -2, 0]

    code, out = invoke(capsys, "family", "mpm", "--p", "3", "--m", "1", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["framing"] == 5
    assert doc["knot"] == {"a": 3, "b": 2, "unknot": False}
    assert doc["boundary"] == {"kind": "lens", "p": 5, "q": 4}

    code, out = invoke(capsys, "family", "mpm", "--p", "3", "--m", "1")
    assert code == 0
    assert "T(3,2)" in out and "framing 5" in out and "L(5,4)" in out


# -- lattice subcommands ---------------------------------------------------------

def test_lattice_minus_one_even_branch(capsys):
    code, out = invoke(capsys, "lattice", "minus-one", "--p", "4", "--m", "3")
    assert code == 0
    assert out.strip() == "NoneByEvenness"


def test_lattice_minus_one_witness_exits_nonzero(tmp_path, capsys):
    doc = {"vertices": [{"id": 0, "weight": -1}], "edges": []}
    path = tmp_path / "graph.json"
    path.write_text(json.dumps(doc))
    code, out = invoke(capsys, "lattice", "minus-one", "--file", str(path))
    assert code == 1
    assert out.startswith("Witness")


def test_lattice_minus_one_inconclusive_exits_nonzero(capsys):
    code, out = invoke(capsys, "lattice", "minus-one", "--p", "3", "--m", "1")
    assert code == 1
    assert out.startswith("Inconclusive")


def test_lattice_roots(capsys):
    code, out = invoke(capsys, "lattice", "roots", "--p", "3", "--m", "-1", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["norm"] == -2
    assert doc["count"] == len(doc["vectors"]) > 0
    code, out = invoke(capsys, "lattice", "roots", "--p", "3", "--m", "1")
    assert code == 1


# -- replay and verify -------------------------------------------------------------

def test_replay_json_validates_against_schema(capsys):
    code, out = invoke(capsys, "replay", "thm1-2", "--p", "3", "--m", "1", "--format", "json")
    assert code == 0
    report = json.loads(out)
    jsonschema.validate(report, SCHEMA)
    assert report["trace"][-1]["F"] == [[5]]


def test_verify_blowup_grid_json_passes_and_validates(capsys):
    code, out = invoke(
        capsys, "verify", "blowup", "--p-max", "5", "--m-min", "-2", "--m-max", "2", "--format", "json"
    )
    assert code == 0
    reports = json.loads(out)
    jsonschema.validate(reports, SCHEMA)
    assert len(reports) == 4 * 5
    assert all(c["status"] == "pass" for r in reports for c in r["checks"])


def test_verify_blowup_full_default_grid():
    proc = run_cli(["verify", "blowup", "--p-max", "12", "--m-min", "-5", "--m-max", "5", "--format", "json"])
    assert proc.returncode == 0
    reports = json.loads(proc.stdout)
    jsonschema.validate(reports, SCHEMA)
    assert len(reports) == 11 * 11
    assert all(c["status"] == "pass" for r in reports for c in r["checks"])


def test_verify_cor15_json_validates(capsys):
    code, out = invoke(
        capsys, "verify", "cor1-5", "--p-max", "6", "--m-min", "-3", "--m-max", "3", "--format", "json"
    )
    assert code == 0
    reports = json.loads(out)
    jsonschema.validate(reports, SCHEMA)
    statuses = {c["status"] for r in reports for c in r["checks"]}
    assert statuses == {"pass", "skipped"}


def test_verify_single_point(capsys):
    code, out = invoke(capsys, "verify", "blowup", "--p", "3", "--m", "1")
    assert code == 0
    assert "determinant" in out and "pass" in out


def test_parallel_output_is_byte_identical():
    args = ["verify", "blowup", "--p-max", "6", "--m-min", "-2", "--m-max", "2", "--format", "json"]
    serial = run_cli(args)
    parallel = run_cli(args + ["--parallel"])
    assert serial.returncode == parallel.returncode == 0
    assert serial.stdout == parallel.stdout


# -- exit codes ---------------------------------------------------------------------

def test_usage_errors_exit_2(tmp_path, capsys):
    # missing file
    code = main(["invariants", "--file", str(tmp_path / "absent.json")])
    capsys.readouterr()
    assert code == 2
    # malformed graph
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code = main(["boundary", "--file", str(bad)])
    capsys.readouterr()
    assert code == 2
    # invalid grid bounds
    code = main(["verify", "blowup", "--p-max", "1"])
    capsys.readouterr()
    assert code == 2
    code = main(["verify", "blowup", "--m-min", "3", "--m-max", "-3"])
    capsys.readouterr()
    assert code == 2
    # p below the family range
    code = main(["family", "cp", "--p", "1"])
    capsys.readouterr()
    assert code == 2


def test_unknown_subcommand_exits_2():
    proc = run_cli(["frobnicate"])
    assert proc.returncode == 2


def test_non_chain_graph_is_usage_error(tmp_path, capsys):
    doc = {
        "vertices": [{"id": 0, "weight": -2}, {"id": 1, "weight": -2}, {"id": 2, "weight": -2}, {"id": 3, "weight": -2}],
        "edges": [[0, 1], [0, 2], [0, 3]],
    }
    path = tmp_path / "star.json"
    path.write_text(json.dumps(doc))
    code = main(["boundary", "--file", str(path)])
    capsys.readouterr()
    assert code == 2


# -- RunConfig plumbing ---------------------------------------------------------------

def test_config_from_args_builds_commands():
    parser = build_parser()
    cfg = config_from_args(parser.parse_args(["family", "cp", "--p", "4"]))
    assert cfg.command == "family-cp" and cfg.p == 4
    cfg = config_from_args(parser.parse_args(["verify", "cor1-5", "--p-max", "8", "--parallel"]))
    assert cfg.command == "verify-cor1-5" and cfg.p_max == 8 and cfg.parallel
    cfg = config_from_args(parser.parse_args(["lattice", "roots", "--p", "3", "--m", "-1", "--norm", "-4"]))
    assert cfg.command == "lattice-roots" and cfg.norm == -4


def test_run_rejects_unknown_command(capsys):
    assert run(RunConfig(command="nonsense")) == 2
    capsys.readouterr()
