"""Tests for the command-line front end."""

import json

import pytest
from rich.console import Console

from controllers.cli.main import EXIT_FALSE, EXIT_LIMITS, EXIT_OK, EXIT_USAGE, run
from topology_engine.families.assembly import t_kn
from topology_engine.triangulation.isosig import decode_iso_signature, is_isomorphic, iso_signature
from topology_engine.triangulation.moves import move_2_3
from topology_engine.triangulation.table_format import format_gluing_table, parse_gluing_table

console = Console()

T33 = "gLLMQbeefffehhqxhqq"


def _json(capsys):
    return json.loads(capsys.readouterr().out)


def test_gen_tkn_signature(capsys):
    assert run(["gen", "tkn", "--k", "3", "--n", "3", "--out", "isosig"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == T33


def test_gen_json_report(capsys):
    assert run(["gen", "lst", "--j", "1", "--k", "3", "--out", "json"]) == EXIT_OK
    report = _json(capsys)
    assert report["schema_version"] == "1"
    assert report["parameters"] == {"j": 1, "k": 3}
    assert report["tet_count"] == 2


def test_invariants_of_t33(capsys):
    assert run(["--json", "invariants", T33]) == EXIT_OK
    report = _json(capsys)
    assert report["h1"] == "Z + Z_2 + Z_4"
    assert report["tet_count"] == 6
    assert [v["kind"] for v in report["vertices"]] == ["torus"]


def test_certify_tightness_family(capsys):
    assert run(["--json", "certify", "tightness", "--family", "tkn", "--k", "5", "--n", "7"]) == EXIT_OK
    report = _json(capsys)
    assert report["verdict"] is True
    assert report["negative_euler_sum"] == 12


def test_certify_false_verdict(tmp_path, capsys):
    t = t_kn(3, 3)
    bigger = next(
        move_2_3(t, tet, face)
        for tet in range(t.tet_count)
        for face in range(4)
        if t.adjacent(tet, face)[0] != tet
    )
    path = tmp_path / "bigger.txt"
    path.write_text(format_gluing_table(bigger))
    assert run(["--json", "certify", "tightness", str(path)]) == EXIT_FALSE
    assert _json(capsys)["tet_count"] == 7


def test_certify_table3_and_norms(capsys):
    assert run(["certify", "table3"]) == EXIT_OK
    capsys.readouterr()
    assert run(["--json", "certify", "norms", "--k", "5", "--n", "7"]) == EXIT_OK
    assert _json(capsys)["norms"] == [3, 4, 5]


def test_usage_errors():
    assert run(["frobnicate"]) == EXIT_USAGE
    assert run(["gen", "nope"]) == EXIT_USAGE
    assert run(["gen", "tkn", "--k", "3"]) == EXIT_USAGE
    assert run(["gen", "tkn", "--k", "4", "--n", "3"]) == EXIT_USAGE
    assert run(["invariants", "@@@"]) == EXIT_USAGE
    assert run(["certify", "tightness"]) == EXIT_USAGE


def test_limits_are_reported_distinctly():
    big = iso_signature(t_kn(5, 5))
    assert run(["normal", "enumerate", big]) == EXIT_LIMITS


def test_normal_enumerate_closed(capsys):
    assert run(["--json", "normal", "enumerate", T33, "--filter", "closed"]) == EXIT_OK
    report = _json(capsys)
    assert report["count"] == len(report["surfaces"]) > 0
    assert all(s["closed"] for s in report["surfaces"])


def test_json_output_is_deterministic(capsys):
    run(["--json", "certify", "tightness", T33])
    first = capsys.readouterr().out
    run(["--json", "certify", "tightness", T33])
    assert capsys.readouterr().out == first


def test_convert_round_trip(tmp_path, capsys):
    assert run(["convert", T33, "--to", "table"]) == EXIT_OK
    table = capsys.readouterr().out
    path = tmp_path / "t33.txt"
    path.write_text(table)
    assert run(["convert", str(path), "--to", "isosig"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == T33
    assert is_isomorphic(parse_gluing_table(table), decode_iso_signature(T33)) is not None


def test_scan_records_malformed_lines(tmp_path, capsys):
    path = tmp_path / "sigs.txt"
    path.write_text(f"{T33}\n\n@@@\n{iso_signature(t_kn(3, 5))}\n")
    assert run(["--json", "scan", str(path)]) == EXIT_OK
    report = _json(capsys)
    assert [r["line"] for r in report["rows"]] == [1, 3, 4]
    assert [r["status"] for r in report["rows"]] == ["ok", "decode-error", "ok"]
    assert report["summary"]["hits"] == 2
    assert report["summary"]["decode_failures"] == 1
    console.print(report["summary"])


def test_scan_missing_file():
    assert run(["scan", "/nonexistent/signatures.txt"]) == EXIT_USAGE


@pytest.mark.parametrize("env, expected", [("3", EXIT_LIMITS), ("8", EXIT_OK)])
def test_tet_limit_from_environment(monkeypatch, env, expected):
    monkeypatch.setenv("TOPOLOGY_MAX_ENUM_TETS", env)
    assert run(["normal", "enumerate", T33, "--filter", "closed"]) == expected
