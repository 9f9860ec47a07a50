import csv
import json
import os
import subprocess
import sys

import pytest

from spinharm import cli
from spinharm.cli import main, strip_timestamp, write_atomic
from spinharm.schema import LIST_SCHEMA, REPORT_SCHEMA

jsonschema = pytest.importorskip("jsonschema")


def _run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_exit_ok_and_schema(tmp_path, capsys):
    out = tmp_path / "r.json"
    code, stdout, _ = _run(["verify", "--lmax", "2", "--pairs", "3", "--filter", "spinhalf.*",
                            "--format", "json", "--out", str(out), "--jobs", "1"], capsys)
    assert code == 0
    assert "failed=0" in stdout
    doc = json.loads(out.read_text())
    jsonschema.validate(doc, REPORT_SCHEMA)
    assert {c["id"].split(".")[0] for c in doc["cases"]} == {"spinhalf"}
    assert list(doc)[-1] == "timestamp"
    assert doc["meta"]["seed"] == 42 and doc["meta"]["l_max"] == 2


def test_verify_deterministic(tmp_path, capsys):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for p, jobs in zip(paths, ("1", "2")):
        assert _run(["verify", "--lmax", "3", "--pairs", "4", "--filter", "moments.*,spin1.*",
                     "--format", "json", "--out", str(p), "--jobs", jobs], capsys)[0] == 0
    a, b = (strip_timestamp(p.read_text()) for p in paths)
    assert a == b
    json.loads(a)


def test_strip_timestamp_roundtrip():
    body = json.dumps({"meta": {}, "cases": [], "summary": {}}, indent=2) + "\n"
    assert strip_timestamp(cli._with_timestamp(body)) == body


def test_verify_unknown_filter(capsys):
    code, _, err = _run(["verify", "--filter", "nosuch.*"], capsys)
    assert code == 2
    assert "nosuch.*" in err


def test_verify_numeric_failure(capsys):
    code, _, err = _run(["verify", "--lmax", "3", "--pairs", "2", "--filter", "spin1.delta2",
                         "--tol", "1e-30", "--jobs", "1"], capsys)
    assert code == 1
    assert "FAIL" in err and "spin1.delta2" in err


def test_usage_errors(capsys):
    assert _run(["verify", "--pairs", "0"], capsys)[0] == 2
    assert _run(["verify", "--seed", "-1"], capsys)[0] == 2
    assert _run(["bogus"], capsys)[0] == 2
    assert _run([], capsys)[0] == 2


def test_list(capsys):
    code, text, _ = _run(["list"], capsys)
    assert code == 0
    line = next(ln for ln in text.splitlines() if ln.startswith("spin32.delta3 "))
    assert "eq:add3hal4" in line and "explicit" in line
    code, text, _ = _run(["list", "--format", "json"], capsys)
    doc = json.loads(text)
    jsonschema.validate(doc, LIST_SCHEMA)
    assert doc["summary"]["explicit"] >= 45
    assert doc["summary"]["total"] == len(doc["theorems"])
    code, text, _ = _run(["list", "--format", "csv", "--filter", "spinhalf.*"], capsys)
    assert len(text.splitlines()) == 5


def test_extract_trace_column(capsys):
    code, text, _ = _run(["extract", "--theorem", "spin1.same-l", "--lmax", "6", "--format", "json"], capsys)
    assert code == 0
    for fit in json.loads(text)["fits"]:
        l, j = fit["params"]["l"], fit["params"]["j"]
        assert abs(fit["coefficients"]["C[1,1,0]"] - (2 * j + 1) / (3 * (2 * l + 1))) < 1e-9


def test_extract_spin32_residuals(capsys):
    code, text, _ = _run(["extract", "--theorem", "spin32.same-l", "--lmax", "4", "--format", "csv"], capsys)
    assert code == 0
    head, *rows = list(csv.reader(text.splitlines()))
    k = head.index("residual")
    assert "C[3/2,3/2,0]" in head and rows
    for rec in rows:
        assert float(rec[k]) < 1e-9


def test_extract_explicit_theorem_is_usage_error(capsys):
    code, _, err = _run(["extract", "--theorem", "spinhalf.same-l"], capsys)
    assert code == 2 and "explicit" in err
    assert _run(["extract", "--theorem", "nosuch"], capsys)[0] == 2


def test_write_atomic_leaves_no_partial_file(tmp_path, monkeypatch):
    target = tmp_path / "out.json"
    target.write_text("old")

    class Boom(Exception):
        pass

    real_replace = os.replace

    def failing_replace(src, dst):
        raise Boom()

    monkeypatch.setattr(os, "replace", failing_replace)
    with pytest.raises(Boom):
        write_atomic(str(target), "new")
    monkeypatch.setattr(os, "replace", real_replace)
    assert target.read_text() == "old"
    assert os.listdir(tmp_path) == ["out.json"]
    write_atomic(str(target), "new")
    assert target.read_text() == "new"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "spinharm", "list", "--filter", "scalar.classic"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.startswith("scalar.classic")
