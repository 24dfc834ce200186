import json

import pytest

from orthocrit import cli, lemma


def run_json(capsys, *argv):
    code = cli.run([*argv, "--format", "json"])
    return code, json.loads(capsys.readouterr().out)


def test_critical_set_json(capsys):
    code, data = run_json(capsys, "critical-set", "--n", "2", "--mu", "3,2")
    assert code == 0 and data["critical_set"] == [-1, 0, 1, 2]
    assert data["n"] == 2 and data["mu"] == [3, 2]


def test_negative_last_entry(capsys):
    code, data = run_json(capsys, "critical-set", "--n", "2", "--mu", "3,-2")
    assert code == 0 and data["critical_set"] == [-1, 0, 1, 2]


def test_rankin_selberg(capsys):
    code, data = run_json(capsys, "critical-set", "--rankin-selberg", "12,8")
    assert code == 0 and data["critical_set"] == [8, 9, 10, 11]
    assert cli.run(["critical-set", "--rankin-selberg", "6,8"]) == 1


def test_kostant(capsys):
    code, data = run_json(capsys, "kostant", "--ambient-rank", "3", "--delete", "1")
    assert code == 0 and data["count"] == 6
    assert [r["length"] for r in data["reps"]] == [0, 1, 2, 2, 3, 4]
    code = cli.run(["kostant", "--ambient-rank", "3"])
    out = capsys.readouterr().out
    assert "count 6" in out and "[0, 1, 2, 2, 3, 4]" in out


def test_roots_and_weyl(capsys):
    code, data = run_json(capsys, "roots", "--rank", "3")
    assert code == 0 and data["num_roots"] == 12 and data["rho"] == [2, 1, 0]
    code, data = run_json(capsys, "weyl", "--rank", "3")
    assert data["order"] == 24 and data["length_distribution"] == [1, 3, 5, 6, 5, 3, 1]


def test_ratios(capsys):
    code, data = run_json(capsys, "ratios", "--n", "2", "--mu", "3,2")
    hits = {r["d"]: r["pair"] for r in data["ratios"] if r["pair"]}
    assert hits == {-3: [1, 2], -2: [0, 1], -1: [-1, 0]}


def test_verify_lemma(capsys):
    code = cli.run(["verify-lemma", "--n", "2", "--mu-max", "4", "--d-window", "auto"])
    out = capsys.readouterr().out
    assert code == 0
    assert out.startswith("0 counterexamples / 255 instances")


def test_verify_lemma_explicit_window(capsys):
    code, data = run_json(capsys, "verify-lemma", "--n", "2", "--mu-max", "4", "--d-window=-10,6")
    assert code == 0 and data["instances"] == 425 and data["runtime_ms"] is None


def test_output_is_reproducible(capsys, tmp_path):
    outs = []
    for i in range(2):
        path = tmp_path / f"r{i}.json"
        assert cli.run(["verify-lemma", "--n", "2", "--n", "4", "--mu-max", "2",
                        "--format", "json", "--output", str(path)]) == 0
        outs.append((capsys.readouterr().out, path.read_bytes()))
    assert outs[0] == outs[1]
    assert outs[0][0].encode() == outs[0][1]


def test_output_dir_env(monkeypatch, tmp_path, capsys):
    monkeypatch.setenv(cli.OUTPUT_DIR_ENV, str(tmp_path))
    assert cli.run(["critical-set", "--n", "2", "--mu", "3,2", "--output", "cs.json"]) == 0
    assert json.loads((tmp_path / "cs.json").read_text())["critical_set"] == [-1, 0, 1, 2]
    assert not list(tmp_path.glob(".*.tmp"))


@pytest.mark.parametrize("argv", [
    ["bogus"],
    ["critical-set", "--n", "2", "--mu", "2,3"],
    ["critical-set", "--n", "3", "--mu", "2,1,0"],
    ["critical-set", "--n", "2", "--mu", "x,1"],
    ["verify-lemma", "--n", "3", "--mu-max", "2"],
    ["ratios", "--n", "2"],
    ["roots", "--rank", "1"],
    ["kostant", "--ambient-rank", "3", "--delete", "7"],
])
def test_usage_errors(argv, capsys):
    assert cli.run(argv) == 1
    assert "error" in capsys.readouterr().err


def test_dominance_message(capsys):
    cli.run(["critical-set", "--n", "2", "--mu", "2,3"])
    assert "mu_1 >= mu_2 >= ... >= mu_{n-1} >= |mu_n|" in capsys.readouterr().err


def test_ceiling_exit_code(capsys):
    assert cli.run(["weyl", "--rank", "9"]) == 3
    assert cli.run(["weyl", "--rank", "4", "--ceiling", "3"]) == 3


def test_budget_exit_code_writes_checkpoint(tmp_path, capsys):
    path = tmp_path / "cp.json"
    assert cli.run(["verify-lemma", "--n", "2", "--mu-max", "4", "--max-instances", "40",
                    "--output", str(path)]) == 3
    data = json.loads(path.read_text())
    assert data["complete"] is False and data["instances"] <= 40


def test_counterexample_exit_code(monkeypatch, tmp_path, capsys):
    monkeypatch.setattr(lemma, "check_condition_2", lambda inst: True)
    target = tmp_path / "bad.json"
    assert cli.run(["verify-lemma", "--n", "2", "--mu-max", "2",
                    "--counterexamples", str(target)]) == 2
    data = json.loads(target.read_text())
    assert data["counterexamples"]


def test_explore_odd(capsys):
    code = cli.run(["verify-lemma", "--n", "3", "--mu-max", "2", "--explore-odd"])
    out = capsys.readouterr().out
    assert code == 0 and "exploratory" in out
