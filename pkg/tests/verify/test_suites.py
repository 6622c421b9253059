import pytest

from hardyops.verify.records import Expectation, Status, Verdict, build_report
from hardyops.verify.suites import SuiteName, SuiteResult, plan_suite, run_suite, stream_seed


@pytest.fixture
def wide_config(run_config):
    return run_config.model_copy(update={"window": 48})


def _report(verdict_residual: float, *, certified: bool):
    return build_report(
        "demo",
        "demo statement",
        verdict_residual,
        1e-8,
        inputs={"check": "demo"},
        certified=certified,
        trusted_window=((0, 1),),
    )


def test_stream_seed_is_deterministic_and_per_suite():
    assert stream_seed(7, SuiteName.DEFECTS) == stream_seed(7, SuiteName.DEFECTS)
    assert stream_seed(7, SuiteName.DEFECTS) != stream_seed(7, SuiteName.PROJECTIONS)
    assert stream_seed(7, SuiteName.DEFECTS, 1) != stream_seed(7, SuiteName.DEFECTS)
    assert stream_seed(7, SuiteName.DEFECTS) != stream_seed(8, SuiteName.DEFECTS)


def test_full_plan_is_the_union_of_suites(run_config):
    parts = [
        SuiteName.PROJECTIONS,
        SuiteName.DEFECTS,
        SuiteName.INTERTWINING,
        SuiteName.DECOMPOSITIONS,
        SuiteName.VANISHING,
    ]
    everything = plan_suite(SuiteName.ALL, run_config)
    ids = [check.check_id for check in everything]

    assert len(everything) == sum(len(plan_suite(part, run_config)) for part in parts)
    assert len(set(ids)) == len(ids)


def test_plan_sizes(run_config):
    assert len(plan_suite(SuiteName.PROJECTIONS, run_config)) == 46
    assert len(plan_suite(SuiteName.VANISHING, run_config)) == 115
    assert len(plan_suite(SuiteName.DEFECTS, run_config)) == 243
    assert len(plan_suite(SuiteName.INTERTWINING, run_config)) == 93
    assert len(plan_suite(SuiteName.DECOMPOSITIONS, run_config)) == 32


def test_only_certified_failures_fail_the_suite():
    heuristic_failure = _report(1.0, certified=False)
    certified_pass = _report(0.0, certified=True)
    certified_failure = _report(1.0, certified=True)

    assert not SuiteResult(SuiteName.DEFECTS, 7, (heuristic_failure, certified_pass)).failed
    assert SuiteResult(SuiteName.DEFECTS, 7, (certified_pass, certified_failure)).failed


def test_summary_counts_verdicts():
    result = SuiteResult(SuiteName.DEFECTS, 7, (_report(0.0, certified=True), _report(1.0, certified=False)))

    assert result.count(Verdict.PASS) == 1
    assert result.summary() == "suite defects: 2 checks, 1 passed, 1 failed, 0 inconclusive, 1 heuristic"


@pytest.mark.slow
def test_projection_suite_passes_and_is_sorted(wide_config):
    result = run_suite(SuiteName.PROJECTIONS, wide_config)
    ids = [report.check_id for report in result.reports]

    assert len(result.reports) == 46
    assert ids == sorted(ids)
    assert not result.failed
    assert all(report.verdict is Verdict.PASS for report in result.reports)
    assert all(report.status is Status.CERTIFIED for report in result.reports)


@pytest.mark.slow
def test_reports_do_not_depend_on_jobs(wide_config):
    serial = run_suite(SuiteName.PROJECTIONS, wide_config)
    threaded = run_suite(SuiteName.PROJECTIONS, wide_config.model_copy(update={"jobs": 4}))

    assert [r.to_dict() for r in serial.reports] == [r.to_dict() for r in threaded.reports]


@pytest.mark.slow
def test_vanishing_suite_passes(wide_config):
    result = run_suite(SuiteName.VANISHING, wide_config)

    assert len(result.reports) == 115
    assert not result.failed
    assert all(report.verdict is Verdict.PASS for report in result.reports)
    expectations = {report.expectation for report in result.reports}
    assert expectations == {Expectation.VANISH, Expectation.SEPARATE}


@pytest.mark.slow
@pytest.mark.parametrize(
    ("suite", "size"),
    [
        (SuiteName.DEFECTS, 243),
        (SuiteName.INTERTWINING, 93),
        (SuiteName.DECOMPOSITIONS, 32),
    ],
)
def test_identity_suites_pass(wide_config, suite, size):
    result = run_suite(suite, wide_config)

    assert len(result.reports) == size
    assert not result.failed
    assert result.count(Verdict.FAIL) == 0, result.summary()


@pytest.mark.slow
def test_random_commutators_separate_from_zero(wide_config):
    result = run_suite(SuiteName.INTERTWINING, wide_config)
    outside = [report for report in result.reports if report.check_id.startswith("intertwining/probe/outside-")]

    assert len(outside) == 20
    for report in outside:
        assert report.expectation is Expectation.SEPARATE, report.check_id
        assert report.verdict is Verdict.PASS, report.summary_line()
