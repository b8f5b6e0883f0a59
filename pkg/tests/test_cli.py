import csv
import io
import json

import pytest

from kleingrass import build_grassmannian, verify_certificate
from kleingrass.cli import main, verify_all
from kleingrass.fixtures import PUBLISHED, TABLE2
from kleingrass.serialize import (
    certificate_from_json,
    structure_from_json,
    structure_to_dot,
    structure_to_json,
)


def run(capsys, *argv, **kw):
    code = main(list(argv), **kw)
    return code, capsys.readouterr().out


def test_verify_all(capsys):
    code, out = run(capsys, "verify-all")
    assert code == 0
    assert "5/5 suites passed" in out
    assert '"params": [28, 6, 56, 3]' in out


def test_verify_all_json(capsys):
    code, out = run(capsys, "verify-all", "--format", "json")
    report = json.loads(out)
    assert code == 0 and report["passed"]
    assert [s["name"] for s in report["suites"]] == ["table1", "table2", "isomorphism", "heptads", "sequence"]


def test_verify_all_detects_perturbed_table2(capsys):
    bad = PUBLISHED.with_table2_row(1, (1, 4, 10))
    code, out = run(capsys, "verify-all", "--format", "json", fixtures=bad)
    assert code == 1
    report = json.loads(out)
    assert any(msg.startswith("table2 row 1") for msg in report["failures"])
    assert [s["name"] for s in report["suites"] if not s["passed"]] == ["table2"]


def test_verify_all_detects_perturbed_bijection():
    bijection = dict(PUBLISHED.bijection)
    bijection[27], bijection[28] = bijection[28], bijection[27]
    from dataclasses import replace

    report = verify_all(replace(PUBLISHED, bijection=bijection))
    assert not report["passed"]
    assert "isomorphism" in {s["name"] for s in report["suites"] if not s["passed"]}


def test_iso_exit_codes(capsys, tmp_path):
    out = tmp_path / "cert.json"
    code, _ = run(capsys, "iso", "off-structure", "grassmannian", "2", "8", "--out", str(out))
    assert code == 0
    cert = certificate_from_json(out.read_text())
    assert len(cert) == 28
    code, _ = run(capsys, "iso", "grassmannian", "2", "5", "grassmannian", "2", "5")
    assert code == 0
    code, _ = run(capsys, "iso", "grassmannian", "2", "4", "grassmannian", "2", "5")
    assert code == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["iso", "off-structure"],
        ["iso", "nonsense", "grassmannian", "2", "3"],
        ["iso", "grassmannian", "x", "3", "off-structure"],
        ["iso", "grassmannian", "0", "3", "off-structure"],
        ["export", "heptads", "--format", "dot"],
        ["export", "sequence", "--format", "csv"],
        ["bogus-command"],
    ],
)
def test_usage_errors(capsys, argv):
    code = main(argv)
    capsys.readouterr()
    assert code == 3


def test_iso_malformed_json_file(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _ = run(capsys, "iso", str(bad), "off-structure")
    assert code == 3


def test_export_off_structure_csv(capsys):
    code, out = run(capsys, "export", "off-structure", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["No."] + [str(i) for i in range(1, 29)]
    body = rows[1:]
    assert len(body) == 56 and all(len(r) == 29 for r in body)
    assert sum(cell == "+" for r in body for cell in r[1:]) == 168
    # cell-for-cell the published matrix
    for j, (r, triple) in enumerate(zip(body, TABLE2), start=1):
        assert r[0] == str(j)
        assert [i for i, cell in enumerate(r[1:], start=1) if cell == "+"] == sorted(triple)


def test_export_grassmannian_json(capsys, tmp_path):
    path = tmp_path / "g28.json"
    code, _ = run(capsys, "export", "grassmannian", "2", "8", "--format", "json", "--out", str(path))
    assert code == 0
    data = json.loads(path.read_text())
    assert len(data["points"]) == 28 and len(data["lines"]) == 56
    assert data["meta"] == {"params": [28, 6, 56, 3], "name": "G_2(8)"}
    # a JSON file is itself a structure spec
    code, _ = run(capsys, "iso", str(path), "off-structure")
    assert code == 0


def test_export_sequence_json(capsys):
    code, out = run(capsys, "export", "sequence", "--format", "json")
    steps = json.loads(out)["steps"]
    assert code == 0 and len(steps) == 8
    assert steps[-1]["structure"]["points"] == [] and steps[-1]["remark"] == "empty set"
    assert [s["params"] for s in steps[:7]] == [list(r.params) for r in PUBLISHED.nested[:7]]
    assert steps[3]["remark"] == "Desargues" and steps[4]["remark"] == "Pasch"


def test_export_heptads(capsys):
    code, out = run(capsys, "export", "heptads", "--format", "json")
    records = json.loads(out)["heptads"]
    assert code == 0 and len(records) == 8
    assert {"rows": list(range(22, 29)), "mark": 8} in [{"rows": r["rows"], "mark": r["mark"]} for r in records]
    code, out = run(capsys, "export", "heptads", "--format", "csv")
    assert out.count("\n") == 9


def test_export_dot(capsys):
    code, out = run(capsys, "export", "grassmannian", "2", "4", "--format", "dot")
    assert code == 0
    assert out.count("shape=circle") == 6 and out.count("shape=box") == 4
    assert out.count(" -- ") == 12


def test_heptads_and_sequence_commands(capsys):
    code, out = run(capsys, "heptads")
    assert code == 0 and "mark 8  rows [22, 23, 24, 25, 26, 27, 28]" in out
    code, out = run(capsys, "sequence")
    assert code == 0
    assert "(10_3, 10_3)   G_2(5)   Desargues" in out
    code, out = run(capsys, "sequence", "--seed", "7", "--format", "json")
    assert code == 0 and json.loads(out)["steps"][0]["removed_heptad"] is None


@pytest.mark.parametrize(
    "argv",
    [
        ["verify-all", "--format", "json"],
        ["export", "off-structure", "--format", "json"],
        ["export", "sequence", "--format", "json"],
        ["export", "grassmannian", "2", "6", "--format", "dot"],
        ["heptads", "--format", "json"],
    ],
)
def test_deterministic_output(capsys, argv):
    _, first = run(capsys, *argv)
    _, second = run(capsys, *argv)
    assert first == second


def test_json_round_trip(tagged_off_structure, g28):
    for s in (tagged_off_structure, g28, build_grassmannian(3, 6)):
        back = structure_from_json(structure_to_json(s))
        assert back == s
        assert back.points == s.points
        assert back.tags == s.tags
        assert verify_certificate(s, back, {p: p for p in s.points})
    off = structure_from_json(structure_to_json(tagged_off_structure))
    assert off.tags[off.points[0]]["coords"] == "110000"


def test_dot_is_bipartite(g28):
    dot = structure_to_dot(g28)
    edges = [line.strip().rstrip(";").split(" -- ") for line in dot.splitlines() if " -- " in line]
    assert len(edges) == 168
    assert all(a.startswith('"L') and b.startswith('"p') for a, b in edges)


def test_quiet(capsys):
    code, out = run(capsys, "verify-all", "--quiet")
    assert code == 0 and out == ""
