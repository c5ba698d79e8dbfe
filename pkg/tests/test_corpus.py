"""Tests for the seeded property corpus."""
import pytest

from minorhost.tasks import corpus
from minorhost.tasks.corpus import SUITES, Suite, run_instance


@pytest.mark.parametrize("index", range(SUITES["lemma-2con"].count()))
def test_cycle_pair_suite_passes_at_default_caps(index):
    """Every C_{3,3} instance stays within the exact-search cap and certifies."""
    records = run_instance(("lemma-2con", index, 42, False))
    assert [r["status"] for r in records] == ["pass"]
    assert records[0]["detail"]["route"]


def test_cycle_pair_suite_reports_structured_routes():
    """The attached-cycle instances record the route that produced them."""
    count = SUITES["lemma-2con"].count()
    routes = {run_instance(("lemma-2con", i, 42, False))[0]["detail"]["route"] for i in range(count - 3, count)}
    assert routes == {"d1-path-in-d2", "disjoint-cycles", "shared-vertex"}


def test_passing_records_keep_detail():
    """Passing records carry the same detail as failing ones."""
    records = run_instance(("ell", 0, 42, False))
    values = next(r for r in records if r["property"] == "recurrence-values")
    assert values["status"] == "pass"
    assert values["detail"]["values"] == {"ell(2,2)": 7, "ell(3,3)": 46}


def test_unexpected_errors_become_records(monkeypatch):
    """A crash inside a suite is reported as a failing record, not raised."""

    def crash(index, rng, mutant):
        raise ValueError("bad input")

    monkeypatch.setitem(corpus.SUITES, "crash", Suite(name="crash", count=lambda: 1, run=crash))
    records = run_instance(("crash", 0, 42, False))
    assert len(records) == 1
    assert records[0]["status"] == "fail"
    assert records[0]["detail"]["kind"] == "error"
    assert records[0]["detail"]["type"] == "ValueError"
    assert records[0]["detail"]["error"] == "bad input"
