import pytest

from ggpunitary.verify import SUITES, VerifyReport, partitions_up_to, run_suites


def test_all_suites_pass_with_default_bounds():
    reports = run_suites(["all"])
    assert [r.suite for r in reports] == list(SUITES)
    for r in reports:
        assert r.ok, r.line()
        assert r.cases_run > 0


@pytest.mark.parametrize("selection,max_n,qs", [
    (["duality"], 12, None),
    (["dimension"], 5, (3,)),
    (["census"], None, None),
])
def test_documented_examples(selection, max_n, qs):
    (report,) = run_suites(selection, max_n=max_n, qs=qs)
    assert report.failures == [] and report.error is None


def test_oracle_error_isolated(monkeypatch):
    monkeypatch.setenv("GGP_ORACLE_LIMIT", "10")
    reports = {r.suite: r for r in run_suites(["census", "vanishing"], max_n=5)}
    assert reports["census"].error and "oracle range" in reports["census"].error
    assert not reports["census"].ok
    assert reports["vanishing"].ok


def test_report_rendering():
    r = VerifyReport("x", cases_run=3, failures=[("a", "1", "2")], elapsed=0.5)
    assert r.line() == "FAIL x: cases=3 failures=1 elapsed=0.50s"
    assert r.to_json()["failures"] == [{"input": "a", "expected": "1", "got": "2"}]
    assert VerifyReport("y", cases_run=1).line().startswith("PASS y:")


def test_unknown():
    with pytest.raises(ValueError, match="unknown suite"):
        run_suites(["bogus"])


def test_partitions_up_to():
    assert [tuple(p) for p in partitions_up_to(2)] == [(), (1,), (2,), (1, 1)]
    assert len(list(partitions_up_to(4, start=4))) == 5
