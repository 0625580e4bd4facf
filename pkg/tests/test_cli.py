import json

import pytest

from nmdskit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_field_command(capsys):
    code, obj = run_json(capsys, "field", "--p", "2", "--m", "3")
    assert code == 0
    assert obj["q"] == 8
    assert obj["modulus"] == [1, 1, 0, 1]


def test_construct_and_analyze(tmp_path, capsys):
    out = tmp_path / "code.json"
    code, _ = run(capsys, "construct", "--family", "g3", "--p", "2", "--m", "3",
                  "--k", "4", "--out", str(out))
    assert code == 0
    code, obj = run_json(capsys, "analyze", str(out))
    assert code == 0
    assert obj["class"] == "nmds"
    assert obj["weight_distribution"] == ["1", "0", "0", "49", "49", "882", "1470", "1645"]
    assert obj["prediction_agrees"] is True


def test_subset_sum_all_methods_agree(capsys):
    code, obj = run_json(capsys, "subset-sum", "--p", "2", "--m", "3",
                         "--domain", "units", "--k", "4")
    assert code == 0
    assert obj["methods_agree"] is True
    assert set(obj["counts"].values()) == {"7"}


def test_subset_sum_nonzero_target(capsys):
    code, obj = run_json(capsys, "subset-sum", "--p", "3", "--m", "2",
                         "--domain", "full", "--k", "3", "--b", "5")
    assert code == 0
    assert obj["methods_agree"] is True


def test_design_command(capsys):
    code, obj = run_json(capsys, "design", "--family", "g4", "--p", "2", "--m", "3",
                         "--k", "4", "--t", "3")
    assert code == 0
    assert obj["verified"] is True
    assert obj["primal"]["lambda"] == 1


def test_design_odd_k_has_no_claim(capsys):
    code, obj = run_json(capsys, "design", "--family", "g4", "--p", "2", "--m", "3",
                         "--k", "5", "--t", "3")
    assert code == 0
    assert obj["design_claim"] is None


def test_verify_examples_suite(capsys):
    code, obj = run_json(capsys, "verify", "--suite", "examples")
    assert code == 0
    assert obj["failed"] == 0
    assert obj["passed"] == 8


def test_usage_error_exit_code(capsys):
    assert main(["analyze", "/nonexistent/file.json"]) == 2
    with pytest.raises(SystemExit) as exc:
        main(["construct", "--family", "g9", "--p", "2", "--m", "3", "--k", "4"])
    assert exc.value.code == 2


def test_budget_exit_code(monkeypatch, capsys):
    monkeypatch.setenv("NMDSKIT_SUBSET_BUDGET", "5")
    code = main(["subset-sum", "--p", "2", "--m", "4", "--domain", "units",
                 "--k", "7", "--method", "brute"])
    assert code == 3


def test_config_file(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"subset_budget": 5}))
    code = main(["subset-sum", "--p", "2", "--m", "4", "--domain", "units",
                 "--k", "7", "--method", "brute", "--config", str(cfg)])
    assert code == 3


def test_out_file_written(tmp_path, capsys):
    out = tmp_path / "report.json"
    code, _ = run(capsys, "verify", "--suite", "examples", "--out", str(out))
    assert code == 0
    obj = json.loads(out.read_text())
    assert obj["failed"] == 0
