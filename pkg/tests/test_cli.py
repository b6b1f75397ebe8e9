"""CLI behavior: canonical JSON, exit codes, determinism."""

import json
import subprocess
import sys

import pytest

from polychar.cli import run


def _capture(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out
    return code, out


def test_char_trivial_exact_bytes(capsys):
    code, out = _capture(capsys, ["char", "A2", "0", "0"])
    assert code == 0
    assert out == '[{"c":1,"w":[0,0]}]\n'


def test_char_adjoint(capsys):
    code, out = _capture(capsys, ["char", "A2", "1", "1"])
    assert code == 0
    payload = json.loads(out)
    assert sum(e["c"] for e in payload) == 8


def test_bsum_a1(capsys):
    code, out = _capture(capsys, ["bsum", "A1", "4"])
    assert code == 0
    payload = json.loads(out)
    assert [e["w"] for e in payload] == [[-4], [-2], [0], [2], [4]]
    assert all(e["c"] == 1 for e in payload)


def test_bsum_both_match(capsys):
    code, out = _capture(capsys, ["bsum", "B2", "2", "1", "--method", "both"])
    assert code == 0
    payload = json.loads(out)
    assert payload["match"] is True
    assert payload["diff"] == []
    assert payload["oracle"] == payload["demazure"]


def test_bsum_both_mismatch_exits_1(capsys):
    # the known G2 discrepancy surfaces as a nonzero exit
    code, out = _capture(capsys, ["bsum", "G2", "1", "0", "--method", "both"])
    assert code == 1
    payload = json.loads(out)
    assert payload["match"] is False
    assert payload["diff"] == [
        {"c": -1, "w": [-1, 2]}, {"c": -1, "w": [0, 0]}, {"c": -1, "w": [1, -2]},
    ]


def test_verify_clean_algebra(capsys):
    code, out = _capture(capsys, ["verify", "--algebra", "B2", "--max-label", "2"])
    assert code == 0
    payload = json.loads(out)
    assert len(payload) == 9
    assert all(r["match"] for r in payload)


def test_verify_g2_exits_1(capsys):
    code, out = _capture(capsys, ["verify", "--algebra", "G2", "--max-label", "1"])
    assert code == 1
    payload = json.loads(out)
    by_lam = {tuple(r["lambda"]): r["match"] for r in payload}
    assert by_lam == {(0, 0): True, (0, 1): True, (1, 0): False, (1, 1): False}


def test_eval_single_case(capsys):
    code, out = _capture(
        capsys, ["eval", "--algebra", "A2", "--lam", "1", "1", "--sigma-count", "5"]
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["pass"] is True
    assert payload["brion_max_rel_err"] < 1e-9


def test_eval_needs_both_flags(capsys):
    code = run(["eval", "--algebra", "A2"])
    assert code == 2


def test_expand_exact(capsys):
    code, out = _capture(capsys, ["expand", "A2", "1", "1"])
    assert code == 0
    assert out == '[{"c":1,"w":[0,0]},{"c":1,"w":[1,1]}]\n'


def test_vertices_sorted(capsys):
    code, out = _capture(capsys, ["vertices", "A2", "1", "0"])
    assert code == 0
    assert json.loads(out) == [[-1, 1], [0, -1], [1, 0]]


def test_deterministic_output(capsys):
    _, first = _capture(capsys, ["char", "G2", "2", "1"])
    _, second = _capture(capsys, ["char", "G2", "2", "1"])
    assert first == second


@pytest.mark.parametrize(
    "argv",
    [["char", "A2", "1"], ["char", "E6", "1", "1"], ["bsum", "A2", "1", "1", "1"],
     ["vertices", "A2", "-1", "0"]],
)
def test_usage_errors_exit_2(capsys, argv):
    assert run(argv) == 2


def test_unknown_subcommand_exit_2(capsys):
    assert run(["frobnicate"]) == 2


def test_out_flag(tmp_path, capsys):
    target = tmp_path / "char.json"
    code, out = _capture(capsys, ["char", "A1", "2", "--out", str(target)])
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text()) == [
        {"c": 1, "w": [-2]}, {"c": 1, "w": [0]}, {"c": 1, "w": [2]},
    ]


def test_table_mode(capsys):
    code, out = _capture(capsys, ["bsum", "A1", "2", "--table"])
    assert code == 0
    assert "weight -> coeff" in out
    assert "[0] -> 1" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "polychar", "char", "A2", "0", "0"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == '[{"c":1,"w":[0,0]}]\n'
