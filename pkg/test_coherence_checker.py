"""
Tests for the coherence_checker command line
"""

import json

import pandas as pd
import pytest

from coherence_checker import (
    EXIT_BOUNDARY, EXIT_FAILURES, EXIT_OK, EXIT_PARSE, EXIT_UNSUPPORTED, EXIT_WRITE, main,
)

COLLAPSE = {"src": 2, "tgt": 1, "apex": 2, "srcLeg": [0, 1], "tgtLeg": [0, 0]}
EXPAND = {"src": 1, "tgt": 2, "apex": 2, "srcLeg": [0, 0], "tgtLeg": [0, 1]}
COLUMN = {"src": 1, "tgt": 2, "entries": [[{"size": 1}], [{"size": 2}]]}
SQUARE = {"src": 2, "tgt": 2, "entries": [[{"size": 2}, {"size": 1}], [{"size": 0}, {"size": 3}]]}
SMALL_FLAGS = ["--cases", "2", "--max-size", "2", "--max-dim", "2", "--max-edges", "2"]


@pytest.fixture
def write_json(tmp_path):
    def write(name, obj):
        path = tmp_path / name
        path.write_text(json.dumps(obj) if not isinstance(obj, str) else obj, encoding="utf-8")
        return str(path)
    return write


def test_compose_spans(write_json, capsys):
    first, second = write_json("f.json", COLLAPSE), write_json("g.json", EXPAND)
    assert main(["compose", "span", first, second]) == EXIT_OK
    result = json.loads(capsys.readouterr().out)
    assert result["apex"] == 4
    assert result["srcLeg"] == [0, 0, 1, 1]
    assert result["tgtLeg"] == [0, 1, 0, 1]


def test_compose_matrices(write_json, capsys):
    first, second = write_json("m.json", COLUMN), write_json("n.json", SQUARE)
    assert main(["compose", "mat", first, second]) == EXIT_OK
    result = json.loads(capsys.readouterr().out)
    assert [[x["size"] for x in row] for row in result["entries"]] == [[4], [6]]


def test_boundary_mismatch(write_json):
    column = write_json("m.json", COLUMN)
    assert main(["compose", "mat", column, column]) == EXIT_BOUNDARY


def test_write_result_to_file(write_json, tmp_path, capsys):
    out = tmp_path / "out.json"
    assert main(["tensor", "span", write_json("f.json", COLLAPSE), write_json("g.json", EXPAND),
                 "--out", str(out)]) == EXIT_OK
    assert json.loads(out.read_text())["apex"] == 4
    assert capsys.readouterr().out.strip() == "span 2 -> 2 (apex 4)"


def test_unwritable_output(write_json, tmp_path):
    out = tmp_path / "missing" / "out.json"
    assert main(["dual", "span", write_json("f.json", COLLAPSE), "--out", str(out)]) == EXIT_WRITE


def test_dual_relation(write_json, capsys):
    assert main(["dual", "rel", write_json("f.json", COLLAPSE)]) == EXIT_OK
    result = json.loads(capsys.readouterr().out)
    assert (result["src"], result["tgt"]) == (1, 2)


@pytest.mark.parametrize("content", ["{oops", '{"src": 2}', json.dumps({**COLLAPSE, "srcLeg": [0, 5]})])
def test_parse_errors(write_json, content):
    assert main(["dual", "span", write_json("bad.json", content)]) == EXIT_PARSE


def test_missing_file(tmp_path):
    assert main(["dual", "span", str(tmp_path / "nope.json")]) == EXIT_PARSE


def test_unknown_bicategory_is_rejected():
    with pytest.raises(SystemExit) as exc:
        main(["gen", "poset"])
    assert exc.value.code == 2


def test_gen_is_seeded(capsys):
    assert main(["gen", "net", "--seed", "4"]) == EXIT_OK
    first = capsys.readouterr().out
    assert main(["gen", "net", "--seed", "4"]) == EXIT_OK
    assert capsys.readouterr().out == first
    assert set(json.loads(first)) == {"src", "tgt", "apex", "srcLeg", "tgtLeg"}


def test_check_single_law(capsys):
    assert main(["check", "--law", "swallowtail", "--bicat", "span", "--seed", "7", "--cases", "20"]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["status"] == "passed" and report["cases"] == 20


def test_check_unsupported_law(capsys):
    assert main(["check", "--law", "coyoneda", "--bicat", "net"]) == EXIT_UNSUPPORTED
    assert json.loads(capsys.readouterr().out)["status"] == "unsupported"


def test_check_needs_a_selection():
    assert main(["check", "--law", "pentagon"]) == EXIT_PARSE
    assert main(["check", "--law", "pentagon", "--bicat", "span", "--cases", "-1"]) == EXIT_PARSE


def test_check_all_with_csv(tmp_path, capsys):
    csv_file = tmp_path / "summary.csv"
    assert main(["check", "--all", "--csv", str(csv_file)] + SMALL_FLAGS) == EXIT_OK
    reports = json.loads(capsys.readouterr().out)
    assert len(reports) == 28
    assert all(r["status"] == "passed" for r in reports)
    assert len(pd.read_csv(csv_file)) == 28


def test_failing_suite_exits_with_failures(monkeypatch, capsys):
    from ccbicat import harness
    from ccbicat.laws import Bicategory, Law

    broken = harness.LawCase(lambda rng, cfg: {"n": 1}, lambda inst: False)
    monkeypatch.setitem(harness.LAW_CASES, (Law.PENTAGON, Bicategory.REL), broken)
    assert main(["check", "--law", "pentagon", "--bicat", "rel", "--cases", "3"]) == EXIT_FAILURES
    report = json.loads(capsys.readouterr().out)
    assert [f["case"] for f in report["failures"]] == [0, 1, 2]


@pytest.mark.parametrize("law, bicat", [("pentagon", "span"), ("zigzag", "prof"), ("triangle", "net")])
def test_check_output_is_byte_identical_for_a_seed(law, bicat, capsys):
    args = ["check", "--law", law, "--bicat", bicat, "--seed", "7"] + SMALL_FLAGS
    assert main(args) == EXIT_OK
    first = capsys.readouterr().out
    assert main(args) == EXIT_OK
    assert capsys.readouterr().out == first


def test_failure_reports_are_byte_identical_for_a_seed(monkeypatch, capsys):
    from ccbicat import harness
    from ccbicat.laws import Bicategory, Law

    def build(rng, cfg):
        return {"spans": harness.random_span_chain(rng, cfg, 2)}

    monkeypatch.setitem(harness.LAW_CASES, (Law.PENTAGON, Bicategory.SPAN),
                        harness.LawCase(build, lambda inst: False))
    args = ["check", "--law", "pentagon", "--bicat", "span", "--seed", "7", "--cases", "5"]
    assert main(args) == EXIT_FAILURES
    first = capsys.readouterr().out
    assert main(args) == EXIT_FAILURES
    assert capsys.readouterr().out == first
    assert len(json.loads(first)["failures"]) == 5
