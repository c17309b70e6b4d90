import pytest

from src.analyzer.corpus_runner import CorpusRunner, TrialPlan, run_trial


def strip_times(report):
    data = report.model_dump()
    for trial in data['trials']:
        trial.pop('wall_time')
    return data


def test_plan_is_seeded():
    first = CorpusRunner.plan(20, 5, 30, master_seed=9)
    assert first == CorpusRunner.plan(20, 5, 30, master_seed=9)
    assert all(5 <= p.v <= 30 for p in first)
    assert [p.index for p in first] == list(range(20))


@pytest.mark.parametrize("args", [(-1, 5, 10), (3, 3, 10), (3, 9, 8)])
def test_plan_rejects_bad_ranges(args):
    with pytest.raises(ValueError):
        CorpusRunner.plan(*args, master_seed=0)


def test_single_trial():
    record = run_trial(TrialPlan(index=0, v=9, seed=123))
    assert record.passed, record.failures
    assert record.e_P == 2 * record.v - 3
    assert 1 <= record.builder_steps <= record.e_P - record.v


def test_runs_are_reproducible():
    runner = CorpusRunner()
    assert strip_times(runner.run(5, 5, 10, master_seed=3)) == strip_times(runner.run(5, 5, 10, master_seed=3))


def test_jobs_do_not_change_records():
    serial = CorpusRunner(jobs=1).run(4, 5, 9, master_seed=1)
    parallel = CorpusRunner(jobs=2).run(4, 5, 9, master_seed=1)
    assert strip_times(serial) == strip_times(parallel)


@pytest.mark.slow
def test_hundred_random_spheres():
    report = CorpusRunner().run(100, 5, 30, master_seed=0)
    assert report.failed == 0, [t.failures for t in report.trials if not t.passed]
    assert report.count_law_holds == report.total == 100
