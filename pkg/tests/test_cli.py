import json
import subprocess
import sys

import pytest

from sdlattice import catalog, interchange
from sdlattice.cli import main
from sdlattice.core import is_isomorphic


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, L in [("n5", catalog.n5()), ("m3", catalog.m3()), ("b2", catalog.boolean(2)),
                    ("chain4", catalog.chain(4)), ("chain2", catalog.chain(2))]:
        path = tmp_path / f"{name}.json"
        interchange.dump(L, path)
        out[name] = str(path)
    bad = tmp_path / "bad.json"
    bad.write_text('{"name": "x", "elements": ["0"]', encoding="utf-8")
    out["bad"] = str(bad)
    return out


def run(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_check_n5(capsys, files):
    code, out, _ = run(capsys, "check", files["n5"])
    assert code == 0
    assert out.splitlines()[0] == "lattice ✓, SD∧ ✓, SD∨ ✓, simple ✗, isolated intervals: [(a,b)]"


def test_check_m3(capsys, files):
    code, out, _ = run(capsys, "check", files["m3"])
    assert "SD∧ ✗ witness(x,y,z)" in out


def test_malformed_exits_2(capsys, files, tmp_path):
    code, out, err = run(capsys, "check", files["bad"])
    assert code == 2 and out == "" and err.startswith("error:")
    assert run(capsys, "check", str(tmp_path / "missing.json"))[0] == 2
    assert run(capsys, "catalog", "nonsense")[0] == 2


def test_con(capsys, files):
    assert "5 congruences, Con ≅ (B_2)₊" in run(capsys, "con", files["n5"])[1]
    assert "Con ≅ B_3" in run(capsys, "con", files["chain4"])[1]
    assert "Con ≅ B_1 (2-chain)" in run(capsys, "con", files["chain2"])[1]


def test_double(capsys, files, tmp_path):
    target = tmp_path / "m3x.json"
    code, out, _ = run(capsys, "double", files["m3"], "-u", "x", "--out", str(target))
    assert code == 0
    assert interchange.load(target).n == 6
    assert "Con ≅ 3-chain" in out
    code, out, _ = run(capsys, "double", files["b2"], "-u", "p", "-u", "q")
    assert code == 0 and "B_2 sublattice ✓" in out


def test_glue(capsys, files, tmp_path):
    target = tmp_path / "k.json"
    code, out, _ = run(capsys, "glue", files["n5"], "--interval", "a,b", "--with", files["m3"],
                       "--out", str(target))
    assert code == 0
    assert "Con isomorphism ✓, Con ≅ (B_2)₊" in out
    assert interchange.load(target).n == 8
    code, out, _ = run(capsys, "glue", files["chain4"], "--interval", "a,b", "--with", files["m3"])
    assert code == 0
    assert "Con isomorphism ✗" in out and "expected divergence [leaking-interval-class]" in out
    assert "|Con L| = 8, |Con K| = 8" in out
    assert run(capsys, "glue", files["n5"], "--interval", "0,c", "--with", files["m3"])[0] == 2
    assert run(capsys, "glue", files["n5"], "--interval", "a", "--with", files["m3"])[0] == 2


def test_catalog_emits_interchange(capsys):
    code, out, _ = run(capsys, "catalog", "l9")
    assert code == 0
    assert interchange.loads(out) == catalog.l9()


def test_machine_format(capsys, files):
    code, out, _ = run(capsys, "con", files["n5"], "--format", "machine")
    lines = out.splitlines()
    assert len(lines) == 1
    doc = json.loads(lines[0])
    assert doc["count"] == 5 and doc["shape"] == "(B_2)₊"
    carrier = interchange.from_dict(doc["carrier"])
    assert is_isomorphic(carrier, catalog.add_zero(catalog.boolean(2)))


def test_census(capsys):
    code, out, _ = run(capsys, "census", "--max-size", "6", "--predicate", "sd")
    assert code == 0
    assert "Con ≅ 3-chain: 0; simple: chain2" in out


def test_verify_reports(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "glue", "--max-size", "5")
    assert code == 0
    assert "expected divergence [leaking-interval-class]: chain4 [a,b] := M3" in out
    report = tmp_path / "report.json"
    code, _, _ = run(capsys, "verify", "sd-equivalence", "--max-size", "5",
                     "--format", "machine", "--out", str(report))
    doc = json.loads(report.read_text())
    assert code == 0 and doc["failures"] == [] and doc["instances"] == 10
    assert "runtime_ms" not in doc


def test_verify_size_limit(capsys):
    assert run(capsys, "verify", "census", "--max-size", "9")[0] == 2


def test_output_is_byte_deterministic():
    cmd = [sys.executable, "-m", "sdlattice", "verify", "all", "--max-size", "5"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first
