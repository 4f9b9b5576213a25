from __future__ import annotations

import json
import random

import pytest

from rankcert.certify import MeasurementEnsemble
from rankcert.cli import run


def write_ensemble(path, n, mats, symmetric=False):
    path.write_text(MeasurementEnsemble(n, mats, symmetric=symmetric).dumps())
    return str(path)


def rand_mats(seed, n, m):
    rng = random.Random(seed)
    return [[[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)] for _ in range(m)]


UNIT = [[[1, 0], [0, 0]], [[0, 1], [0, 0]], [[0, 0], [1, 0]], [[0, 0], [0, 1]]]


def test_bounds_table(capsys, tmp_path):
    out = tmp_path / "rows.jsonl"
    assert run(["bounds", "--n", "4", "--r", "1", "--format", "json", "--out", str(out)]) == 0
    rows = [json.loads(line) for line in out.read_text().splitlines()]
    assert {r["variant"]: r["bound"] for r in rows} == {"general": 12, "symmetric": 7, "weak-recovery": 8}
    capsys.readouterr()
    assert run(["bounds", "--n", "2:6", "--r", "1:3"]) == 0
    text = capsys.readouterr().out
    assert text.splitlines()[0].split()[:3] == ["n", "r", "variant"]


def test_certify_exit_codes(tmp_path):
    cert = tmp_path / "cert.json"
    assert run(["certify", write_ensemble(tmp_path / "a.json", 2, UNIT), "--out", str(cert), "--audit"]) == 0
    assert json.loads(cert.read_text())["verdict"] == "INJECTIVE"
    assert run(["certify", write_ensemble(tmp_path / "b.json", 3, rand_mats(0, 3, 4), True)]) == 1
    big = write_ensemble(tmp_path / "c.json", 4, rand_mats(5, 4, 6), True)
    assert run(["certify", big, "--max-pairs", "3"]) == 2


def test_usage_errors_name_the_token(tmp_path, capsys):
    empty = tmp_path / "empty.json"
    empty.write_text("")
    assert run(["certify", str(empty)]) == 3
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 2, "matrices": [[["1", "x7"], ["0", "0"]]]}')
    assert run(["certify", str(bad)]) == 3
    assert "x7" in capsys.readouterr().err
    assert run(["certify", str(tmp_path / "missing.json")]) == 3
    assert run(["certify", write_ensemble(tmp_path / "a.json", 2, UNIT), "--keep-vars", "x11"]) == 3
    assert run(["certify", write_ensemble(tmp_path / "a.json", 2, UNIT), "--keep-vars", "x11,q9"]) == 3
    assert "q9" in capsys.readouterr().err
    assert run(["frobnicate"]) == 3


def test_sturm(tmp_path, capsys):
    f = tmp_path / "f.txt"
    f.write_text("x^3 - 2*x\n")
    assert run(["sturm", str(f)]) == 0
    assert "real roots: 3" in capsys.readouterr().out
    f.write_text("a^2 + 3*b^2")
    assert run(["sturm", str(f)]) == 0
    assert "nonzero real root: no" in capsys.readouterr().out
    f.write_text("x^^2")
    assert run(["sturm", str(f)]) == 3
    assert "^" in capsys.readouterr().err


def test_phase_retrieval_command(tmp_path):
    p = tmp_path / "w.json"
    p.write_text('{"n": 2, "subspaces": [[["1", "0"]], [["0", "1"]], [["1", "1"]]]}')
    assert run(["phase-retrieval", str(p)]) == 0
    p.write_text('{"n": 2, "subspaces": [[["1", "0"]], [["0", "1"]]]}')
    assert run(["phase-retrieval", str(p)]) == 1


def test_search_command(tmp_path):
    out = tmp_path / "rep.json"
    args = ["search", "--n", "2", "--m", "4", "--trials", "3", "--seed", "1", "--range", "-2:2", "--out", str(out)]
    assert run(args) == 0
    first = out.read_text()
    assert run(args) == 0
    assert out.read_text() == first
    assert json.loads(first)["config"]["lo"] == -2
    assert run(["search", "--n", "2", "--m", "4", "--range", "5:1"]) == 3


def test_verify_thm43(capsys):
    assert run(["verify-paper", "thm43"]) == 0
    assert "f0 degree 10, proportional to golden" in capsys.readouterr().out
