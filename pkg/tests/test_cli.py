import io as _io
import json
import subprocess
import sys

import pytest

from sdmaps import io, wheel
from sdmaps.cli import EXIT_BUDGET, EXIT_FAIL, EXIT_OK, EXIT_USAGE, run_command


def run(*argv):
    out, err = _io.StringIO(), _io.StringIO()
    code = run_command(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def report(text):
    return json.loads(text[text.index("{"):])


def test_antipodal_wheel5():
    code, out, _ = run("check", "antipodal", "--gen", "wheel", "5")
    assert code == EXIT_OK
    assert out.startswith("antipodal: holds")
    r = report(out)
    assert r["verdict"] and r["fixed_vertices"] == 0
    assert r["map"]["counts"] == [6, 10, 6]


def test_antipodal_wheel4_certificate():
    code, out, _ = run("check", "antipodal", "--gen", "wheel", "4", "--out", "json")
    assert code == EXIT_FAIL
    r = json.loads(out)
    assert r["reason"] == "self_dual_not_antipodal"
    assert r["certificate"]["statement"] == "all 4 involutive dualities have a fixed square vertex"


@pytest.mark.parametrize("prop, gen, code", [
    ("self-dual", ["wheel", "4"], EXIT_OK),
    ("self-dual", ["cycle", "3"], EXIT_FAIL),
    ("strong", ["wheel", "3"], EXIT_OK),
    ("strong", ["wheel", "4"], EXIT_FAIL),
    ("obstruction", ["fixture", "fig6_odd_obstruction"], EXIT_OK),
    ("obstruction", ["wheel", "5"], EXIT_FAIL),
    ("symmetric-cycles", ["wheel", "4"], EXIT_FAIL),
    ("antipodal-symmetric", ["wheel", "4"], EXIT_FAIL),
])
def test_check_exit_codes(prop, gen, code):
    assert run("check", prop, "--gen", *gen)[0] == code


def test_symmetric_cycles_modes():
    _, out, _ = run("check", "symmetric-cycles", "--gen", "wheel", "3", "--out", "json")
    assert json.loads(out)["lengths"] == [6, 8]
    code, out, _ = run("check", "symmetric-cycles", "--gen", "wheel", "3", "--mode", "antipodal", "--out", "json")
    assert code == EXIT_OK and json.loads(out)["lengths"] == [6]
    _, out, _ = run("check", "symmetric-cycles", "--gen", "wheel", "3", "--mode", "graph", "--out", "json")
    assert all(len(c["automorphism"]) == 8 for c in json.loads(out)["cycles"])


def test_antipodal_symmetric_host():
    code, out, _ = run("check", "antipodal-symmetric", "--gen", "wheel", "3", "--host", "medial", "--out", "json")
    assert code == EXIT_OK
    assert json.loads(out)["witness"]["orientation"] == "reversing"


def test_budget_exit():
    code, _, err = run("check", "symmetric-cycles", "--gen", "ear", "4", "--budget", "1")
    assert code == EXIT_BUDGET and "budget" in err


def test_derive_and_gen():
    code, out, _ = run("derive", "medial", "--gen", "wheel", "3")
    assert code == EXIT_OK
    assert io.parse_map(out).counts == (6, 12, 8)
    _, dot, _ = run("derive", "incidence", "--gen", "wheel", "3", "--out", "dot")
    assert dot.count(" -- ") == 12
    _, out, _ = run("gen", "pancake", "3", "2")
    assert io.parse_map(out).counts == (7, 12, 7)


def test_adhesion_and_export():
    _, out, _ = run("adhesion", "--gen", "wheel", "3", "--corner", "2")
    assert io.parse_map(out).counts == (7, 12, 7)
    _, dot, _ = run("export", "dot", "--gen", "wheel", "3", "--host", "square")
    assert dot.count(" -- ") == 24


def test_file_input(tmp_path):
    p = tmp_path / "m.json"
    io.write_map(wheel(5), p)
    assert run("check", "antipodal", str(p))[0] == EXIT_OK


def test_stdin_input(monkeypatch):
    monkeypatch.setattr(sys, "stdin", _io.StringIO(io.serialize_map(wheel(4))))
    assert run("check", "self-dual", "-")[0] == EXIT_OK


@pytest.mark.parametrize("argv", [
    ["check", "antipodal"],
    ["check", "antipodal", "--gen", "wheel"],
    ["check", "antipodal", "--gen", "blob", "3"],
    ["check", "antipodal", "--gen", "wheel", "x"],
    ["check", "antipodal", "--gen", "wheel", "2"],
    ["check", "antipodal", "/nonexistent.json"],
    ["check", "nonsense", "--gen", "wheel", "3"],
    ["check", "antipodal", "m.json", "--gen", "wheel", "3"],
])
def test_usage_errors(argv):
    code, _, _ = run(*argv)
    assert code == EXIT_USAGE


def test_invalid_document(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"format_version": "1.0", "darts": 2, "alpha": [0, 1], "sigma": [0, 1]}')
    code, _, err = run("check", "self-dual", str(p))
    assert code == EXIT_USAGE and "NotInvolution" in err


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "sdmaps", "check", "self-dual", "--gen", "wheel", "3"],
                         capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.startswith("self-dual: holds")


def test_symmetric_cycles_reports_graph_reading(tmp_path):
    from sdmaps import CombinatorialMap
    from test_symmetry import SPLIT

    p = tmp_path / "split.json"
    io.write_map(CombinatorialMap(*SPLIT), p)
    _, out, _ = run("check", "symmetric-cycles", str(p), "--out", "json")
    r = json.loads(out)
    assert r["lengths"] == [] and r["graph_lengths"] == [4]
    _, out, _ = run("check", "symmetric-cycles", "--gen", "wheel", "3", "--out", "json")
    assert "graph_lengths" not in json.loads(out)
