"""Command-line behavior: output shape, exit codes, JSON mode."""

from __future__ import annotations

import json
from pathlib import Path

import pytest

from rank1nash import format_game, generate_kt
from rank1nash.cli import main

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


@pytest.fixture
def unreach_path() -> str:
    return str(CORPUS / "unreachable-2x2.game")


@pytest.fixture
def demo_path() -> str:
    return str(CORPUS / "demo-2x3.game")


@pytest.fixture
def degen_path(tmp_path) -> str:
    p = tmp_path / "degen.game"
    p.write_text("2 2\n1 1\n1 1\n1 1\n1 1\n")
    return str(p)


def test_enumerate_human(unreach_path, capsys):
    assert main(["enumerate", unreach_path]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "dispatch: general"
    assert out[1] == "factorization: b=(1, -2/3) c=(-18, 12)"
    assert out[2] == "xi range: [-18, 12]"
    assert out[3] == "equilibria: 3"
    assert "x=(1/5, 4/5) y=(1/5, 4/5) payoffs=(-20, 18) xi=6" in out


def test_enumerate_trace(capsys, tmp_path):
    p = tmp_path / "kt2.game"
    p.write_text(format_game(generate_kt(2)))
    rc = main(
        ["enumerate", str(p), "--factor", "b=2,4", "c=2,4", "--trace"]
    )
    assert rc == 0
    out = capsys.readouterr().out
    assert "xi=2 objective=0 binding={2,3,5,8}" in out
    assert "(2, 5/2) objective<0 binding={2,3,5}" in out
    assert "xi=5/2 objective=-1/4 binding={2,3,4,5}" in out
    assert "pivot at xi=3: feasibility, row 5 leaves, row 6 enters" in out


def test_enumerate_json(unreach_path, capsys):
    assert main(["enumerate", unreach_path, "--json"]) == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["dispatch"] == "general"
    assert obj["xi_range"] == ["-18", "12"]
    assert {(e["payoff1"], e["payoff2"]) for e in obj["equilibria"]} == {
        ("-8", "20"),
        ("-20", "18"),
        ("-18", "30"),
    }
    mixed = next(e for e in obj["equilibria"] if e["x"] == ["1/5", "4/5"])
    assert mixed["source_xi"] == "6"


def test_enumerate_bad_factor(unreach_path, capsys):
    assert main(["enumerate", unreach_path, "--factor", "b=1,1", "c=2,2"]) == 4
    assert main(["enumerate", unreach_path, "--factor", "b=1;1", "c=2,2"]) == 3


def test_enumerate_wrong_rank(demo_path):
    assert main(["enumerate", demo_path]) == 4


def test_enumerate_degenerate(degen_path):
    assert main(["enumerate", degen_path]) == 2


def test_oracle_and_labels(demo_path, capsys):
    assert main(["oracle", demo_path]) == 0
    out = capsys.readouterr().out
    assert "equilibria: 3" in out
    assert "x=(1/2, 1/2) y=(1/2, 1/2, 0) payoffs=(3/2, 9/2)" in out
    assert main(["labels", demo_path]) == 0
    out = capsys.readouterr().out
    assert "labels={2,4}|{1,3,5}" in out


def test_lh_single_and_all(unreach_path, capsys):
    assert main(["lh", unreach_path, "--r", "1"]) == 0
    out = capsys.readouterr().out
    assert (
        out.splitlines()[0]
        == "r=1: ({1,2}|{3,4}) -> ({2,4}|{3,4}) -> ({2,4}|{1,3})"
    )
    assert "terminal: x=(1, 0) y=(0, 1) payoffs=(-18, 30)" in out
    assert main(["lh", unreach_path, "--all"]) == 0
    out = capsys.readouterr().out
    assert "unreached: x=(1/5, 4/5) y=(1/5, 4/5) payoffs=(-20, 18)" in out


def test_lh_bad_label(unreach_path):
    assert main(["lh", unreach_path, "--r", "9"]) == 4


def test_gprime(capsys):
    assert main(["gprime", str(CORPUS / "disconnected-3x3.game")]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "components: 34"
    assert out[1] == "artificial pair component: 0"
    assert sum("with-artificial=no" in l for l in out) == 2


def test_rank_and_check(demo_path, degen_path, capsys):
    assert main(["rank", demo_path]) == 0
    assert capsys.readouterr().out == "rank: 2\n"
    assert main(["check", demo_path]) == 0
    assert capsys.readouterr().out == "non-degenerate\n"
    assert main(["check", degen_path]) == 2
    assert capsys.readouterr().out.startswith("degenerate: vertex")
    assert main(["check", degen_path, "--json"]) == 2
    obj = json.loads(capsys.readouterr().out)
    assert obj["nondegenerate"] is False and "witness" in obj


def test_reduce_rank_round_trip(tmp_path, capsys):
    src = tmp_path / "full.game"
    src.write_text("2 2\n1 0\n0 1\n1 0\n0 1\n")
    assert main(["reduce-rank", str(src)]) == 0
    out = capsys.readouterr().out
    dst = tmp_path / "reduced.game"
    dst.write_text(out)
    assert main(["rank", str(dst)]) == 0
    assert capsys.readouterr().out == "rank: 1\n"


def test_generate_matches_library(capsys):
    assert main(["generate", "--kt", "--d", "3"]) == 0
    out = capsys.readouterr().out
    from rank1nash import parse_game

    assert parse_game(out) == generate_kt(3)


def test_generate_bad_d(capsys):
    assert main(["generate", "--kt", "--d", "0"]) == 4


def test_parse_failures(tmp_path, capsys):
    bad = tmp_path / "bad.game"
    bad.write_text("2 2\n1 2\n3 4\n5 oops\n7 8\n")
    assert main(["enumerate", str(bad)]) == 3
    assert main(["enumerate", str(tmp_path / "missing.game")]) == 3
    assert main(["no-such-command"]) == 3
    assert main([]) == 3


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
    assert "enumerate" in capsys.readouterr().out
