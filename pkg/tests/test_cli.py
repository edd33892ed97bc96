"""Command-line interface: exit codes, output stability, and the worked
example runner."""

import json

import pytest

from edge_ideal_lab.cli import main
from edge_ideal_lab.worked_examples import STAIRCASE_4X4, UNMIXED_6X6


@pytest.fixture
def run(capsys):
    def _run(*argv):
        code = main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return _run


@pytest.fixture
def g6_file(tmp_path):
    p = tmp_path / "g6.txt"
    p.write_text(UNMIXED_6X6)
    return str(p)


def test_analyze_graph_human(run, g6_file):
    code, out, _ = run("analyze", g6_file)
    assert code == 0
    assert "depth: 4" in out and "krull_dim: 6" in out
    assert "is_ACM: False" in out
    assert "minimal primes (5):" in out


def test_analyze_json_is_byte_stable(run, g6_file):
    code1, out1, _ = run("analyze", g6_file, "--json")
    code2, out2, _ = run("analyze", g6_file, "--json")
    assert code1 == code2 == 0
    assert out1 == out2
    payload = json.loads(out1)
    assert payload["schema"] == "edge-ideal-lab/1"
    assert payload["report"]["depth"] == 4
    assert payload["codim"]["connected"] is True


def test_analyze_empty_file_is_cm(run, tmp_path):
    p = tmp_path / "empty.txt"
    p.write_text("")
    code, out, _ = run("analyze", str(p))
    assert code == 0
    assert "is_CM: True" in out


def test_analyze_complex_file(run, tmp_path):
    p = tmp_path / "cx.txt"
    p.write_text("a b c\nb d\n")
    code, out, _ = run("analyze", str(p))
    assert code == 0
    assert "n_vars: 4" in out


def test_analyze_verbose_full_betti(run, tmp_path):
    p = tmp_path / "e.txt"
    p.write_text("x y\n")
    code, out, _ = run("analyze", str(p), "--verbose")
    assert code == 0
    assert "beta_{1,{x,y}}" in out


def test_analyze_parse_error_exit_2(run, tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("u u\n")
    code, _, err = run("analyze", str(p))
    assert code == 2
    assert "line 1" in err


def test_analyze_missing_file_exit_2(run):
    code, _, err = run("analyze", "/nonexistent/file.txt")
    assert code == 2


def test_analyze_resource_guard_exit_3(run, tmp_path):
    lines = [f"a{i} b{i}" for i in range(13)]  # 26 vertices
    p = tmp_path / "big.txt"
    p.write_text("\n".join(lines))
    code, _, err = run("analyze", str(p))
    assert code == 3
    assert "guard" in err


def test_analyze_gf2_field(run, g6_file):
    code, out, _ = run("analyze", g6_file, "--field", "2")
    assert code == 0
    assert "field: GF(2)" in out


def test_ferrers_command(run):
    code, out, _ = run("ferrers", "4", "4", "3", "2")
    assert code == 0
    assert "height = 4" in out and "proj_dim = 5" in out
    assert "AGREE" in out


def test_ferrers_json(run):
    code, out, _ = run("ferrers", "3", "3", "1", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["height"] == 3 and payload["proj_dim"] == 4
    assert payload["unmixed"] is True and payload["is_ACM"] is True
    assert payload["cross_check"]["verdict"] == "AGREE"


def test_ferrers_usage_error(run):
    code, _, err = run("ferrers", "3", "5")
    assert code == 2
    code, _, _ = run("ferrers", "0")
    assert code == 2


def test_ferrers_guard_skips_cross_check(run):
    code, out, _ = run("ferrers", "9", "9", "9", "--max-n", "4")
    assert code == 0
    assert "cross-check" not in out


def test_verify_command(run):
    code, out, _ = run("verify", "L1", "--max-n", "3")
    assert code == 0
    assert "L1: verified at scale" in out
    code, out, _ = run("verify", "MV", "--max-n", "10", "--json")
    assert code == 0
    assert json.loads(out)["verdict"] == "verified at scale"


def test_verify_unknown_id(run):
    code, _, err = run("verify", "T99")
    assert code == 2
    assert "unknown theorem id" in err


def test_examples_command(run):
    code, out, _ = run("examples")
    assert code == 0
    assert "MISMATCH" not in out
    code, out, _ = run("examples", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["all_ok"] is True
    assert len(payload["checks"]) == 13


def test_examples_gf2_reports_but_does_not_fail(run):
    code, out, err = run("examples", "--field", "2")
    assert code == 0


def test_usage_error_exit_2(run):
    assert run("no-such-command")[0] == 2
    assert run()[0] == 2
