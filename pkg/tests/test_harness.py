import os

import numpy as np
import pytest

from geepress import harness
from geepress.exceptions import InputError, ParameterError, SelectionFailedError
from geepress.harness import (ReportConfig, ScenarioResult, parse_config, replicate_report,
                              run_reduced_candidates, run_scenario)
from geepress.simgen import ScenarioSpec

SPEC = ScenarioSpec("binary", "balanced", 30, "exch", 0.4, reps=6, seed=5)


@pytest.fixture(scope="module")
def small_run():
    return run_scenario(SPEC)


def test_selection_rows_sum_to_one(small_run):
    props = small_run.selection_proportions
    assert props.shape == (7, 4)
    np.testing.assert_allclose(props.sum(axis=1), 1.0)
    assert small_run.replicates == 6
    assert small_run.mse.shape == (3, 4)
    assert np.all(small_run.mse >= 0)


def test_singleton_candidate_always_wins():
    res = run_scenario(SPEC, candidates=("ar1",), reps=3)
    np.testing.assert_allclose(res.selection_proportions, 1.0)
    assert res.proportion("GPC", "AR-1") == 1.0


def test_reduced_candidates():
    res = run_reduced_candidates(SPEC, reps=3)
    assert res.candidates == ("indep", "ar1", "exch")


def test_parallel_matches_serial(small_run):
    par = run_scenario(SPEC, jobs=2)
    np.testing.assert_array_equal(par.wins, small_run.wins)
    np.testing.assert_array_equal(par.sq_sum, small_run.sq_sum)


def test_rerun_is_deterministic(small_run):
    again = run_scenario(SPEC)
    np.testing.assert_array_equal(again.sq_sum, small_run.sq_sum)


def test_unknown_criterion_rejected():
    with pytest.raises(ParameterError):
        run_scenario(SPEC, criteria=("AIC",), reps=1)


def _result(completed, failed):
    z = np.zeros((1, 1))
    return ScenarioResult(SPEC, ("exch",), ("GPC",), np.array([[completed]]), z, z, completed, failed)


def test_degraded_threshold():
    assert not _result(95, 5).degraded
    assert _result(94, 6).degraded


def test_all_failed_raises(monkeypatch):
    monkeypatch.setattr(harness, "run_replicate", lambda *a: None)
    with pytest.raises(SelectionFailedError):
        run_scenario(SPEC, reps=2)


def test_failed_replicates_are_excluded(monkeypatch):
    real = harness.run_replicate
    monkeypatch.setattr(harness, "run_replicate", lambda spec, k, *a: None if k == 0 else real(spec, k, *a))
    res = run_scenario(SPEC, candidates=("indep", "exch"), reps=4)
    assert (res.replicates_completed, res.replicates_failed, res.failed_indices) == (3, 1, [0])
    np.testing.assert_allclose(res.selection_proportions.sum(axis=1), 1.0)
    assert res.wins.sum(axis=1).tolist() == [3] * 7


def test_parse_config():
    text = """
    # a comment
    tables = 1, B1   # trailing comment
    reps = 20
    scenario = poisson,unbalanced,un,0.4,100
    scenarios = binary,balanced,ar1,0.2,50; binary,balanced,exch,0.2,50
    criteria = gpc, sc
    """
    cfg = parse_config(text, env={})
    assert cfg.tables == ("1", "B1")
    assert cfg.reps == 20 and cfg.seed == harness.DEFAULT_SEED
    assert len(cfg.scenarios) == 3 and cfg.scenarios[0].structure == "un"
    assert cfg.criteria == ("GPC", "SC")
    assert parse_config("reps = 1", env={"GEEPRESS_SEED": "77"}).seed == 77
    assert parse_config("seed = 3", env={"GEEPRESS_SEED": "77"}).seed == 3


@pytest.mark.parametrize("text,where", [("reps = 1\nbogus = 2", "line 2"), ("tables = 12", "12"),
                                        ("reps", "line 1"), ("reps = many", "many")])
def test_parse_config_errors(text, where):
    with pytest.raises(InputError, match=where):
        parse_config(text, env={})


def test_empty_report_has_headers_only(tmp_path):
    cfg = ReportConfig(tables=("1", "B1"), scenarios=("binary,balanced,exch,0.2,50",), reps=0,
                       out_dir=str(tmp_path))
    replicate_report(cfg)
    for name in ("table_1.csv", "table_B1.csv", "scenarios_selection.csv", "scenarios_mse.csv"):
        lines = (tmp_path / name).read_bytes().split(b"\r\n")
        assert lines[1:] == [b""]
    assert (tmp_path / "summary.md").exists()


def test_report_is_byte_identical(tmp_path):
    def run(sub):
        cfg = ReportConfig(scenarios=("binary,balanced,exch,0.4,30",), reps=3, seed=9,
                           out_dir=str(tmp_path / sub), candidates=("indep", "exch"))
        replicate_report(cfg)
        return {p.name: p.read_bytes() for p in (tmp_path / sub).iterdir()}

    a, b = run("a"), run("b")
    assert a == b
    rows = a["scenarios_selection.csv"].decode().strip().split("\r\n")
    assert len(rows) == 1 + 7 * 2


def test_table_report_columns(tmp_path):
    cfg = ReportConfig(tables=("9",), reps=2, sample_sizes=(50,), out_dir=str(tmp_path))
    replicate_report(cfg)
    rows = (tmp_path / "table_9.csv").read_text().strip().splitlines()
    assert rows[0].split(",") == list(harness.SELECTION_HEADER)
    assert len(rows) == 1 + 2 * 7 * 3  # two truths, seven criteria, three candidates
    assert "0.951" in (tmp_path / "table_9.csv").read_text()
    summary = (tmp_path / "summary.md").read_text()
    assert "## Table 9" in summary and "**" in summary


@pytest.mark.skipif(os.geteuid() == 0, reason="root ignores directory permissions")
def test_unwritable_directory(tmp_path):
    locked = tmp_path / "locked"
    locked.mkdir(mode=0o500)
    with pytest.raises(InputError):
        replicate_report(ReportConfig(reps=0, out_dir=str(locked / "x")))


def test_output_path_is_a_file(tmp_path):
    f = tmp_path / "file"
    f.write_text("x")
    with pytest.raises(InputError):
        replicate_report(ReportConfig(reps=0, out_dir=str(f)))


@pytest.mark.slow
def test_mse_standard_error_shrinks_with_reps():
    spec = ScenarioSpec("poisson", "balanced", 50, "ar1", 0.2, seed=2)
    small = run_scenario(spec, candidates=("ar1",), reps=100).mse_standard_error()
    large = run_scenario(spec, candidates=("ar1",), reps=400).mse_standard_error()
    assert 1.5 < np.median(small / large) < 2.7
