import json

import pytest

import cotorsion_lab.cli.main as cli
from cotorsion_lab.cli.main import main, parse_relations
from cotorsion_lab.exception import (ApproximationUnavailable, DecompositionInconclusive, PresentationError,
                                     ValidationError)


def run_json(capsys, *argv):
    code = main(list(argv) + ["--format", "json"])
    return code, json.loads(capsys.readouterr().out)


def test_census_of_the_shipped_category(capsys):
    code, report = run_json(capsys, "census", "--fixture", "nakayama_six")
    assert code == 0
    assert report["result"]["witness"]["indecomposables"] == 18
    assert report["schema"] == "cotorsion-lab/report/1"


def test_generate_writes_a_category_file(capsys, tmp_path):
    path = tmp_path / "category.json"
    code, report = run_json(capsys, "generate", "--n", "3", "--relations", "1-3", "--out", str(path))
    assert code == 0
    assert report["result"]["witness"]["indecomposables"] == 5

    code, report = run_json(capsys, "census", "--category", str(path))
    assert code == 0
    assert report["result"]["witness"]["indecomposables"] == 5


def test_relations_parse():
    assert parse_relations("1-5, 2-6") == [(1, 5), (2, 6)]
    assert parse_relations("") == []
    with pytest.raises(PresentationError):
        parse_relations("1-x")


def test_bad_input_exits_with_usage_code(capsys):
    assert main(["generate", "--n", "3", "--relations", "1-x"]) == 2
    assert "error:" in capsys.readouterr().err
    assert main(["census", "--fixture", "nonexistent"]) == 2
    assert main(["check-twin", "--fixture", "nakayama_six"]) == 2
    assert main(["check-twin"]) == 2


def test_check_twin(capsys):
    code, report = run_json(capsys, "check-twin", "--fixture", "twin_not_integral")
    assert code == 0
    assert report["result"]["verdict"] == "holds"
    assert report["pairs"]["definitions"]["S"][0] == "[1,4]"


def test_heart_tables(capsys):
    code, report = run_json(capsys, "heart", "--fixture", "twin_abelian")
    assert code == 0
    assert report["result"]["witness"]["heart"] == ["[3,5]"]
    assert report["result"]["details"]["quotient_homs"] == {"[3,5] -> [3,5]": 1}


def test_failed_check_replays(capsys, tmp_path):
    path = tmp_path / "report.json"
    assert main(["check-integral", "--fixture", "twin_not_integral", "--report", str(path)]) == 1
    assert "check-integral: FAILS" in capsys.readouterr().out

    report = json.loads(path.read_text(encoding="utf-8"))
    assert report["result"]["certificate"]["z"] == "[3,5]"
    assert main(["replay", str(path)]) == 0

    report["result"]["certificate"]["offending"] = "[4,5]"
    tampered = tmp_path / "tampered.json"
    tampered.write_text(json.dumps(report), encoding="utf-8")
    assert main(["replay", str(tampered)]) == 4
    assert "replay mismatch" in capsys.readouterr().err


def test_replay_refuses_other_files(tmp_path):
    path = tmp_path / "pairs.json"
    path.write_text(json.dumps({"schema": "cotorsion-lab/pairs/1", "definitions": {}}), encoding="utf-8")
    assert main(["replay", str(path)]) == 2
    assert main(["replay", str(tmp_path / "missing.json")]) == 2


@pytest.mark.parametrize("fixture", ["twin_abelian", "twin_zero_heart"])
def test_abelian_hearts(capsys, fixture):
    code, report = run_json(capsys, "check-abelian", "--fixture", fixture)
    assert code == 0
    assert report["result"]["verdict"] == "holds"


def test_pairs_file_with_expressions(capsys, tmp_path):
    category = tmp_path / "category.json"
    assert main(["generate", "--n", "6", "--relations", "1-5,2-6", "--out", str(category)]) == 0
    pairs = tmp_path / "pairs.json"
    pairs.write_text(json.dumps({"schema": "cotorsion-lab/pairs/1",
                                 "definitions": {"S": "proj()", "T": "all()", "U": "S", "V": "T"}}),
                     encoding="utf-8")
    capsys.readouterr()

    code, report = run_json(capsys, "check-integral", "--category", str(category), "--pairs", str(pairs))
    assert code == 0
    assert report["result"]["route"] == "zero heart"


def test_text_output(capsys):
    assert main(["check-abelian", "--fixture", "twin_not_abelian"]) == 1
    out = capsys.readouterr().out
    assert out.startswith("check-abelian: FAILS")
    assert "route: condition 1" in out


@pytest.mark.parametrize("error, code", [
    (ApproximationUnavailable("No (S,T) approximation of [3,5]"), 3),
    (DecompositionInconclusive(14, 12), 3),
    (ValidationError("Kernel candidate fails the universal property"), 2),
])
def test_errors_map_to_exit_codes(capsys, monkeypatch, error, code):
    def stopped(tp, bounds):
        raise error

    monkeypatch.setattr(cli, "_verified_heart", stopped)
    assert main(["check-integral", "--fixture", "twin_abelian"]) == code
    assert str(error) in capsys.readouterr().err
