import json
import subprocess
import sys

import pytest

from conesemi.cli import EXIT_CAP, EXIT_INPUT, EXIT_MISMATCH, EXIT_OK, main

import worked_examples as ex


def run(capsys, argv):
    capsys.readouterr()
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def skew_file(tmp_path):
    p = tmp_path / "skew.json"
    p.write_text(json.dumps({"cone": {"generators": [[4, 1], [5, 3]]},
                             "gaps": [list(g) for g in ex.SKEW_GAPS]}))
    return str(p)


def test_analyze_text(capsys, skew_file):
    code, out, _ = run(capsys, ["analyze", skew_file])
    assert code == EXIT_OK
    assert "msg (8)" in out and "Minimals(X_S): {(12,5), (13,5), (14,5)}" in out


def test_analyze_json_with_k(capsys, tmp_path):
    p = tmp_path / "k65.json"
    p.write_text(json.dumps({"cone": {"generators": [[1, 0], [0, 1]]},
                             "gaps": [list(g) for g in ex.K65_GAPS], "k": [6, 5]}))
    code, out, _ = run(capsys, ["analyze", str(p), "--format", "json"])
    assert code == EXIT_OK
    entry = json.loads(out)["k"][0]
    assert entry["primary_positioned"] and entry["beta"] == [4, 4]
    assert sorted(map(tuple, entry["B"])) == sorted(ex.K65_B)


def test_analyze_whole_cone(capsys, tmp_path):
    p = tmp_path / "c.json"
    p.write_text(json.dumps({"cone": {"generators": [[1, 0], [0, 1]]}, "gaps": []}))
    code, out, _ = run(capsys, ["analyze", str(p), "--gns-conventions"])
    assert code == EXIT_OK and "S = C" in out and "(-1,-1)" in out


def test_enumeration_commands(capsys):
    code, out, _ = run(capsys, ["irreducible", "--k", "7"])
    assert code == EXIT_OK and out.startswith("3 semigroups")
    code, out, _ = run(capsys, ["irreducible", "--k", "6", "--kind", "pseudo-symmetric", "--format", "json"])
    assert code == EXIT_OK and isinstance(json.loads(out), list)
    code, out, _ = run(capsys, ["ei", "--k", "2,3"])
    assert out.startswith("12 semigroups")
    code, out, _ = run(capsys, ["oracle", "--k", "2,3"])
    assert out.startswith("13 semigroups")
    code, out, _ = run(capsys, ["oracle", "--k", "4", "--all"])
    assert out.startswith("7 semigroups")
    code, out, _ = run(capsys, ["construct", "--k", "7"])
    assert code == EXIT_OK and "{(1), (2), (3)}" in out
    code, out, _ = run(capsys, ["construct", "--k", "2,0"])
    assert code == EXIT_OK and out.startswith("no primary positioned semigroup")


def test_forest_command(capsys):
    code, out, _ = run(capsys, ["forest", "--k", "2,0"])
    assert code == EXIT_OK and "P(k) is empty" in out
    code, out, _ = run(capsys, ["forest", "--cone", "1,0;1,1", "--k", "5,3", "--format", "dot"])
    assert code == EXIT_OK and out.startswith("digraph")


def test_verify_ok_and_mismatch(capsys, monkeypatch):
    code, out, _ = run(capsys, ["verify", "--k", "2,3"])
    assert code == EXIT_OK and out.rstrip().endswith("OK")
    import conesemi.oracle as oracle
    real = oracle.oracle_primary_set
    monkeypatch.setattr(oracle, "oracle_primary_set", lambda *a, **kw: real(*a, **kw)[1:])
    code, out, _ = run(capsys, ["verify", "--k", "2,3"])
    assert code == EXIT_MISMATCH and out.rstrip().endswith("MISMATCH")


def test_cap_exit(capsys, monkeypatch):
    monkeypatch.setenv("CONESEMI_MAX_INTERVAL", "4")
    code, _, err = run(capsys, ["verify", "--k", "3,3"])
    assert code == EXIT_CAP and "error" in err


@pytest.mark.parametrize("argv", [
    ["forest", "--k", "2,x"],
    ["forest", "--k=-1,2"],
    ["forest", "--cone", "1,0;0,0", "--k", "1,1"],
    ["forest", "--k", "2,3", "--order", "bogus"],
    ["irreducible", "--k", "2,2"],
    ["construct", "--cone", "1,0;1,1", "--k", "4,2"],
    ["analyze", "/nonexistent/file.json"],
])
def test_input_errors(capsys, argv):
    code, _, err = run(capsys, argv)
    assert code == EXIT_INPUT and err.startswith("error:")


def test_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as info:
        main(["forest"])
    assert info.value.code == EXIT_INPUT


def test_bad_json_file(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{")
    assert run(capsys, ["analyze", str(p)])[0] == EXIT_INPUT
    p.write_text(json.dumps({"cone": {"generators": [[1, 0], [0, 1]]}, "gaps": [[2, 0]]}))
    assert run(capsys, ["analyze", str(p)])[0] == EXIT_INPUT


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "conesemi", "oracle", "--k", "2,3"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.startswith("13 semigroups")
