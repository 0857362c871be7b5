import csv
import io
import json
import math
import subprocess
import sys

import pytest

from eulermat.cli import CSV_HEADER, linear_frequencies, load_chain, main, UsageError

MUFFLER = {"c": 343, "segments": [{"S": 0.01, "L": 0.1}, {"S": 0.05, "L": 0.3},
                                  {"S": 0.01, "L": 0.1}]}


@pytest.fixture
def chain_file(tmp_path):
    def write(doc, name="chain.json"):
        p = tmp_path / name
        p.write_text(doc if isinstance(doc, str) else json.dumps(doc))
        return str(p)
    return write


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def parse_matrix(line):
    body = line.split(" ", 1)[1]
    body = body.replace("[", "").replace("]", "")
    return [complex(tok.strip()) for tok in body.split(",")]


def test_exp_identity(capsys):
    code, out, _ = run(capsys, "exp", "--alpha", "1", "--phi", "0")
    assert code == 0
    lines = out.splitlines()
    assert lines[2] == "exp_series [[1+0j, 0+0j], [0+0j, 1+0j]]"
    assert lines[3] == "exp_phi [[1+0j, 0+0j], [0+0j, 1+0j]]"
    assert lines[4].startswith("max_abs_diff 0 ")
    assert lines[4].endswith("PASS")


def test_exp_quarter_turn(capsys):
    code, out, _ = run(capsys, "exp", "--alpha", "1", "--phi", "1.5707963267948966")
    assert code == 0
    for line in out.splitlines()[2:4]:
        got = parse_matrix(line)
        assert max(abs(g - e) for g, e in zip(got, [0, 1j, 1j, 0])) <= 1e-15


def test_exp_zero_alpha(capsys):
    code, out, err = run(capsys, "exp", "--alpha", "0", "--phi", "1")
    assert code == 2 and out == "" and "alpha" in err


def test_exp_tolerance_breach_exits_1(capsys):
    code, out, _ = run(capsys, "exp", "--alpha", "5", "--phi", "6", "--tol", "1e-300")
    assert code == 1 and out.rstrip().endswith("FAIL")


@pytest.mark.parametrize("argv", [
    ["exp", "--alpha", "x", "--phi", "1"],
    ["exp", "--alpha", "1"],
    ["exp", "--alpha", "nan", "--phi", "1"],
    ["bogus"],
    [],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_power_examples(capsys):
    code, out, _ = run(capsys, "power", "--alpha", "2", "--n", "2")
    assert code == 0
    assert "psi_pow [[4+0j, 0+0j], [0+0j, 4+0j]]" in out
    assert "repeated [[4+0j, 0+0j], [0+0j, 4+0j]]" in out
    code, out, _ = run(capsys, "power", "--alpha", "1", "--n", "0")
    assert code == 0 and "psi_pow [[1+0j, 0+0j], [0+0j, 1+0j]]" in out
    code, out, _ = run(capsys, "power", "--alpha", "2", "--n", "3")
    assert code == 0
    assert "psi_pow [[0+0j, 4+0j], [16+0j, 0+0j]]" in out
    assert "repeated [[0+0j, 4+0j], [16+0j, 0+0j]]" in out


def test_power_errors(capsys):
    assert run(capsys, "power", "--alpha", "0", "--n", "3")[0] == 2
    assert run(capsys, "power", "--alpha", "2", "--n", "-1")[0] == 2
    assert run(capsys, "power", "--alpha", "10", "--n", "400")[0] == 2


def test_verify_unit_alpha(capsys):
    code, out, _ = run(capsys, "verify", "--alpha", "1")
    assert code == 0
    checks = [l for l in out.splitlines() if l.split()[0] in
              {"note1", "note2", "note3", "note4", "pauli"}]
    assert len(checks) == 5
    for line in checks:
        parts = line.split()
        assert parts[1] == "dev" and parts[3] == "tol" and parts[5] == "PASS"
        assert float(parts[2]) <= float(parts[4])


def test_verify_default_alpha(capsys):
    assert run(capsys, "verify")[0] == 0


def test_verify_other_alpha_skips(capsys):
    code, out, _ = run(capsys, "verify", "--alpha", "2")
    assert code == 0
    lines = {l.split()[0]: l for l in out.splitlines()}
    for name in ("note3", "note4", "pauli"):
        assert "SKIPPED" in lines[name]
    assert lines["note2"].endswith("PASS")


def test_verify_zero_alpha(capsys):
    assert run(capsys, "verify", "--alpha", "0")[0] == 2


def test_cascade_zero_frequency(capsys, chain_file):
    path = chain_file({"c": 343, "segments": [{"S": 0.01, "L": 0.5}]})
    code, out, _ = run(capsys, "cascade", path, "--fmin", "0", "--fmax", "0", "--points", "1")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == CSV_HEADER
    assert len(rows) == 2
    vals = [float(x) for x in rows[1]]
    assert vals[:9] == [0, 1, 0, 0, 0, 0, 0, 1, 0]
    assert vals[9] <= 1e-15


def test_cascade_single_segment(capsys, chain_file):
    path = chain_file({"c": 343, "segments": [{"S": 0.01, "L": 0.5}]})
    code, out, _ = run(capsys, "cascade", path, "--fmin", "37.5", "--fmax", "37.5",
                       "--points", "1")
    assert code == 0
    row = out.splitlines()[1].split(",")
    assert float(row[-1]) <= 1e-12


def test_cascade_muffler(capsys, chain_file):
    path = chain_file(MUFFLER)
    code, out, _ = run(capsys, "cascade", path, "--fmin", "20", "--fmax", "2000",
                       "--points", "100")
    assert code == 0
    assert out.endswith("\n") and "\r" not in out and '"' not in out
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == CSV_HEADER
    data = [[float(x) for x in r] for r in rows[1:]]
    assert len(data) == 100
    assert data[0][0] == 20 and data[-1][0] == 2000
    assert all(len(r) == 10 for r in data)
    assert max(r[9] for r in data) <= 1e-9


@pytest.mark.parametrize("doc", [
    "not json",
    "[]",
    {"segments": [{"S": 1, "L": 1}]},
    {"c": 343, "segments": []},
    {"c": 343, "segments": [{"S": 1}]},
    {"c": -1, "segments": [{"S": 1, "L": 1}]},
    {"c": 343, "segments": [{"S": True, "L": 1}]},
    {"c": 343, "segments": [{"S": "1", "L": 1}]},
    {"c": 343, "segments": [5]},
])
def test_cascade_bad_chain(capsys, chain_file, doc):
    path = chain_file(doc)
    code, out, err = run(capsys, "cascade", path, "--fmin", "0", "--fmax", "1", "--points", "2")
    assert code == 2 and out == "" and err


def test_cascade_bad_range(capsys, chain_file, tmp_path):
    path = chain_file(MUFFLER)
    assert run(capsys, "cascade", path, "--fmin", "10", "--fmax", "1", "--points", "2")[0] == 2
    assert run(capsys, "cascade", path, "--fmin", "-1", "--fmax", "1", "--points", "2")[0] == 2
    assert run(capsys, "cascade", path, "--fmin", "0", "--fmax", "1", "--points", "0")[0] == 2
    missing = str(tmp_path / "nope.json")
    assert run(capsys, "cascade", missing, "--fmin", "0", "--fmax", "1", "--points", "2")[0] == 2


def test_cascade_det_breach_exits_1(capsys, chain_file):
    # 10^4:1 area steps: det cancellation exceeds the per-segment budget
    doc = {"c": 343, "segments": [{"S": 0.5, "L": 1.0}, {"S": 0.5, "L": 1.0},
                                  {"S": 0.0001, "L": 1.0}, {"S": 0.5, "L": 1.0},
                                  {"S": 0.03125, "L": 1.0}]}
    path = chain_file(doc)
    code, out, err = run(capsys, "cascade", path, "--fmin", "54.59014548", "--fmax",
                         "54.59014548", "--points", "1")
    assert code == 1
    assert len(out.splitlines()) == 2
    assert "exceeds" in err


def test_linear_frequencies():
    assert linear_frequencies(5, 9, 1) == [5]
    assert linear_frequencies(0, 1, 5) == [0, 0.25, 0.5, 0.75, 1]
    f = linear_frequencies(20, 2000, 100)
    assert len(f) == 100 and f[0] == 20 and f[-1] == 2000


def test_load_chain(chain_file):
    med, segs = load_chain(chain_file(MUFFLER))
    assert med.c == 343 and [s.S for s in segs] == [0.01, 0.05, 0.01]
    with pytest.raises(UsageError):
        load_chain(chain_file({"c": 343}))


@pytest.mark.parametrize("argv", [
    ["exp", "--alpha", "2", "--phi", "0.7853981633974483"],
    ["power", "--alpha", "1.5", "--n", "17"],
    ["verify", "--alpha", "1"],
])
def test_byte_stable_subprocess(argv):
    cmd = [sys.executable, "-m", "eulermat", *argv]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first
