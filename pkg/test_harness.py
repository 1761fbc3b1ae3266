"""
Tests for seeded generation, the law suites and their summaries
"""

import json

import pandas as pd
import pytest

from ccbicat import harness
from ccbicat.errors import CoherenceError, ShapeError, UnsupportedLawError
from ccbicat.harness import (
    GenConfig, LawCase, case_rng, generate, random_size, random_span_chain, run_all, run_law_suite,
)
from ccbicat.laws import LAW_CATALOG, Bicategory, Law, parse_bicategory, parse_law
from ccbicat.reports import export_summary_csv, summarize, totals_by_bicategory

SMALL = GenConfig(seed=1, max_set_size=2, max_dim=2, max_edges=2, cases=3)


def test_case_generators_are_reproducible():
    a, b = case_rng(7, 3), case_rng(7, 3)
    assert a.integers(0, 1000, size=5).tolist() == b.integers(0, 1000, size=5).tolist()
    assert case_rng(7, 3).random() != case_rng(7, 4).random()


@pytest.mark.parametrize("bicat", [b.value for b in Bicategory])
def test_generate_is_deterministic(bicat):
    cfg = GenConfig(seed=11, cases=5)
    assert list(generate(bicat, cfg)) == list(generate(bicat, cfg))


def test_empty_sets_appear_about_one_time_in_ten():
    rng = case_rng(0, 0)
    draws = [random_size(rng, 4) for _ in range(4000)]
    frequency = draws.count(0) / len(draws)
    assert 0.05 <= frequency <= 0.2
    assert set(draws) == {0, 1, 2, 3, 4}
    assert random_size(rng, 0) == 0
    assert 0 not in {random_size(rng, 3, allow_empty=False) for _ in range(200)}


def test_span_chains_compose():
    chain = random_span_chain(case_rng(3, 0), GenConfig(), 3)
    assert all(chain[k].tgt == chain[k + 1].src for k in range(2))


@pytest.mark.parametrize("kwargs", [{"seed": -1}, {"cases": -1}, {"workers": 0}, {"seed": 2 ** 64}])
def test_bad_configs(kwargs):
    with pytest.raises(ShapeError):
        GenConfig(**kwargs)


def test_parsing_names():
    assert parse_law("hexR") is Law.HEX_R
    assert parse_bicategory(Bicategory.NET) is Bicategory.NET
    with pytest.raises(ValueError):
        parse_law("hexagon")
    with pytest.raises(ValueError):
        parse_bicategory("cat")


def test_catalog():
    pairs = LAW_CATALOG.supported_pairs()
    assert len(pairs) == 28
    assert pairs[0][1] is Bicategory.SPAN
    assert LAW_CATALOG.laws_for(Bicategory.PROF) == [Law.PENTAGON, Law.ZIGZAG, Law.COYONEDA, Law.CARDINALITY]
    assert set(pairs) == set(harness.LAW_CASES)
    with pytest.raises(UnsupportedLawError):
        LAW_CATALOG.require_supported(Law.COYONEDA, Bicategory.NET)
    listed = {entry['law']: entry for entry in LAW_CATALOG.get_available_laws()}
    assert listed['interchange']['bicategories'] == ['span']


def test_unsupported_pair_reports_status():
    report = run_law_suite("coyoneda", "net", SMALL)
    assert report.status == "unsupported"
    assert not report.supported and not report.passed
    assert report.to_dict() == {"law": "coyoneda", "bicategory": "net", "status": "unsupported",
                                "cases": 0, "failures": []}


@pytest.mark.parametrize("law, bicat", LAW_CATALOG.supported_pairs(),
                         ids=lambda v: v.value)
def test_every_supported_suite_passes(law, bicat):
    report = run_law_suite(law, bicat, SMALL)
    assert report.passed, report.to_json()
    assert report.cases_run == 3


def test_swallowtail_on_spans_with_seed_7():
    report = run_law_suite("swallowtail", "span", GenConfig(seed=7, cases=20))
    assert report.passed


def test_failures_carry_replayable_counterexamples(monkeypatch):
    def build(rng, cfg):
        return {"spans": random_span_chain(rng, cfg, 1), "size": int(rng.integers(0, 10))}

    def check(inst):
        if inst["size"] % 2:
            raise CoherenceError("odd")
        return inst["size"] < 5

    monkeypatch.setitem(harness.LAW_CASES, (Law.CARDINALITY, Bicategory.SPAN), LawCase(build, check))
    cfg = GenConfig(seed=5, cases=12)
    report = run_law_suite(Law.CARDINALITY, Bicategory.SPAN, cfg)
    expected = [k for k in range(12) if build(case_rng(5, k), cfg)["size"] >= 5
                or build(case_rng(5, k), cfg)["size"] % 2]
    assert [f.case_index for f in report.failures] == expected
    assert report.status == ("failed" if expected else "passed")
    for failure in report.failures:
        assert failure.seed == 5
        assert failure.message in ("CoherenceError: odd", "cardinality does not hold")
        span = failure.counterexample["spans"][0]
        assert set(span) == {"src", "tgt", "apex", "srcLeg", "tgtLeg"}
    json.loads(report.to_json())


def test_parallel_run_matches_serial():
    cfg = GenConfig(seed=3, cases=6, max_set_size=3)
    serial = run_law_suite("triangle", "span", cfg)
    parallel = run_law_suite("triangle", "span", GenConfig(seed=3, cases=6, max_set_size=3, workers=2))
    assert serial.to_dict() == parallel.to_dict()


def test_summary_tables(tmp_path):
    pairs = [(Law.ZIGZAG, Bicategory.REL), (Law.CARDINALITY, Bicategory.MAT), (Law.COYONEDA, Bicategory.NET)]
    reports = run_all(SMALL, pairs)
    df = summarize(reports)
    assert list(df.columns) == ['Bicategory', 'Law', 'Status', 'Cases', 'Failures', 'First Failing Case']
    assert df['Bicategory'].tolist() == ['mat', 'net', 'rel']
    assert df['First Failing Case'].isna().all()

    totals = totals_by_bicategory(reports).set_index('Bicategory')
    assert totals.loc['net', 'Unsupported'] == 1
    assert totals.loc['mat', 'Cases'] == 3

    out = tmp_path / "summary.csv"
    assert export_summary_csv(reports, out)
    assert len(pd.read_csv(out)) == 3
    assert not export_summary_csv([], tmp_path / "empty.csv")
    assert not (tmp_path / "empty.csv").exists()


def test_unexpected_errors_are_recorded_as_failures(monkeypatch):
    def build(rng, cfg):
        return {"size": int(rng.integers(0, 10))}

    def check(inst):
        return [][inst["size"]]

    monkeypatch.setitem(harness.LAW_CASES, (Law.CARDINALITY, Bicategory.SPAN), LawCase(build, check))
    report = run_law_suite(Law.CARDINALITY, Bicategory.SPAN, GenConfig(seed=2, cases=4))
    assert report.status == "failed"
    assert [f.case_index for f in report.failures] == [0, 1, 2, 3]
    assert all(f.message.startswith("IndexError: ") for f in report.failures)


@pytest.mark.parametrize("bicat", [Bicategory.SPAN, Bicategory.NET])
def test_swallowtail_suite_reaches_size_six(bicat):
    case = harness.LAW_CASES[(Law.SWALLOWTAIL, bicat)]
    cfg = GenConfig(max_set_size=2)
    sizes = set()
    for k in range(200):
        instance = case.build(case_rng(0, k), cfg)
        value = instance["object"].size if bicat is Bicategory.SPAN else instance["foot"].vertices.size
        sizes.add(value)
    assert sizes == set(range(7))
