"""Monte Carlo driver: scenario runs, reference comparison and report bundles."""

from __future__ import annotations

import csv
import io
import logging
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import engine
from .correlation import KINDS, label, normalize_kind
from .criteria import CRITERIA, select
from .engine import FitOptions
from .exceptions import GeePressError, InputError, ParameterError, SelectionFailedError
from .reference_values import MSE, SELECTION
from .simgen import ScenarioSpec, check_design_feasible, generate_dataset

logger = logging.getLogger(__name__)

DEFAULT_SEED = 20240101
DEGRADED_FRACTION = 0.05
PROPORTION_TOLERANCE = 0.05
MSE_TOLERANCE = 0.03
PARAMETERS = ("beta0", "beta1", "beta2")
REDUCED = ("indep", "ar1", "exch")

# table id -> (family, balance, alpha, candidates)
SELECTION_TABLES = {
    "1": ("binary", "balanced", 0.2, KINDS),
    "2": ("binary", "balanced", 0.4, KINDS),
    "3": ("binary", "unbalanced", 0.2, KINDS),
    "4": ("binary", "unbalanced", 0.4, KINDS),
    "5": ("poisson", "balanced", 0.2, KINDS),
    "6": ("poisson", "balanced", 0.4, KINDS),
    "7": ("poisson", "unbalanced", 0.2, KINDS),
    "8": ("poisson", "unbalanced", 0.4, KINDS),
    "9": ("binary", "balanced", 0.2, REDUCED),
}
MSE_TABLES = {f"B{k}": SELECTION_TABLES[str(k)] for k in range(1, 9)}
TABLES = {**SELECTION_TABLES, **MSE_TABLES}


def table_truths(table_id):
    return ("ar1", "exch") if table_id == "9" else ("ar1", "exch", "un")


# ---------------------------------------------------------------- one replicate


@contextmanager
def quiet(level=logging.ERROR):
    """Silence package warnings (UN repairs, divergence) for bulk runs."""
    log = logging.getLogger("geepress")
    old = log.level
    log.setLevel(level)
    try:
        yield
    finally:
        log.setLevel(old)


def run_replicate(spec: ScenarioSpec, k: int, candidates, criteria, options: FitOptions):
    """Generate replicate ``k`` and fit every candidate.

    Returns ``(winners, squared_errors)`` with ``winners[c]`` the index of
    the winning candidate for criterion ``c``, or ``None`` when any
    candidate failed (a dropped replicate).
    """
    data = generate_dataset(spec, k)
    try:
        report = select(data, spec.family, candidates, options, criteria, keep_fits=True)
    except (GeePressError, np.linalg.LinAlgError):
        return None
    if not all(report.converged.values()) or report.errors:
        return None
    truth = np.asarray(spec.beta)
    sq = np.stack([(report.fits[c].beta - truth) ** 2 for c in candidates])
    winners = [candidates.index(report.winners[c]) for c in criteria]
    return winners, sq


def _run_chunk(args):
    spec, indices, candidates, criteria, options = args
    with quiet():
        return [(k, run_replicate(spec, k, candidates, criteria, options)) for k in indices]


# ---------------------------------------------------------------- scenarios


@dataclass
class ScenarioResult:
    """Aggregated outcome of one scenario cell.

    ``wins[c, j]`` counts replicates where criterion ``c`` picked candidate
    ``j``; ``sq_sum``/``sq_sumsq`` accumulate squared errors per candidate
    and coefficient. Proportions and MSEs use completed replicates only.
    """

    spec: ScenarioSpec
    candidates: tuple
    criteria: tuple
    wins: np.ndarray
    sq_sum: np.ndarray
    sq_sumsq: np.ndarray
    replicates_completed: int
    replicates_failed: int
    wall_time: float = 0.0
    failed_indices: list = field(default_factory=list, repr=False)

    @property
    def replicates(self) -> int:
        return self.replicates_completed + self.replicates_failed

    @property
    def degraded(self) -> bool:
        return self.replicates > 0 and self.replicates_failed > DEGRADED_FRACTION * self.replicates

    @property
    def selection_proportions(self) -> np.ndarray:
        """criteria x candidates; each row sums to 1."""
        return self.wins / max(self.replicates_completed, 1)

    @property
    def mse(self) -> np.ndarray:
        """coefficients x candidates."""
        return (self.sq_sum / max(self.replicates_completed, 1)).T

    def mse_standard_error(self) -> np.ndarray:
        n = self.replicates_completed
        if n < 2:
            return np.full(self.mse.shape, np.nan)
        mean = self.sq_sum / n
        var = np.maximum(self.sq_sumsq / n - mean**2, 0.0) * n / (n - 1)
        return np.sqrt(var / n).T

    def proportion(self, criterion, candidate) -> float:
        return float(self.selection_proportions[self.criteria.index(criterion),
                                                 self.candidates.index(normalize_kind(candidate))])

    def mse_of(self, parameter, candidate) -> float:
        return float(self.mse[PARAMETERS.index(parameter), self.candidates.index(normalize_kind(candidate))])


def _chunks(indices, n):
    size = max(1, math.ceil(len(indices) / n))
    return [indices[i:i + size] for i in range(0, len(indices), size)]


def run_scenario(spec: ScenarioSpec, candidates=KINDS, criteria=CRITERIA, jobs=1,
                 options: FitOptions | None = None, reps=None) -> ScenarioResult:
    """Run ``spec.reps`` replicates (or ``reps``) and aggregate winners and squared errors.

    Replicates use independent RNG streams, so the result does not depend
    on ``jobs``; partial results are reduced in replicate order.
    """
    candidates = tuple(dict.fromkeys(normalize_kind(c) for c in candidates))
    if not candidates:
        raise ParameterError("at least one candidate structure is required")
    criteria = tuple(criteria)
    unknown = [c for c in criteria if c not in CRITERIA]
    if unknown:
        raise ParameterError(f"unknown criteria {unknown}; expected a subset of {CRITERIA}")
    options = options or FitOptions(phi_mode="fixed-one")
    reps = spec.reps if reps is None else int(reps)
    check_design_feasible(spec)

    t0 = time.perf_counter()
    indices = list(range(reps))
    jobs = max(1, int(jobs))
    if jobs == 1 or reps < 2:
        outcomes = _run_chunk((spec, indices, candidates, criteria, options))
    else:
        work = [(spec, chunk, candidates, criteria, options) for chunk in _chunks(indices, 4 * jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = [item for part in pool.map(_run_chunk, work) for item in part]
    outcomes.sort(key=lambda item: item[0])

    p = len(spec.beta)
    wins = np.zeros((len(criteria), len(candidates)), dtype=np.int64)
    sq_sum = np.zeros((len(candidates), p))
    sq_sumsq = np.zeros((len(candidates), p))
    failed = []
    for k, out in outcomes:
        if out is None:
            failed.append(k)
            continue
        winners, sq = out
        wins[np.arange(len(criteria)), winners] += 1
        sq_sum += sq
        sq_sumsq += sq**2
    result = ScenarioResult(spec, candidates, criteria, wins, sq_sum, sq_sumsq,
                            reps - len(failed), len(failed), time.perf_counter() - t0, failed)
    if reps and result.replicates_completed == 0:
        raise SelectionFailedError(f"scenario {spec.label}: all {reps} replicates failed")
    if result.degraded:
        logger.warning("scenario %s degraded: %d of %d replicates failed",
                       spec.label, result.replicates_failed, reps)
    return result


def run_reduced_candidates(spec: ScenarioSpec, criteria=CRITERIA, jobs=1, options=None, reps=None):
    """``run_scenario`` with UN removed from the candidate set."""
    return run_scenario(spec, REDUCED, criteria, jobs, options, reps)


# ---------------------------------------------------------------- deletion accuracy


@dataclass(frozen=True)
class DeletionAccuracy:
    N: int
    dbeta_median: float
    press_median: float
    datasets: int


def deletion_accuracy(N, datasets=50, seed=DEFAULT_SEED, alpha=0.2, options=None):
    """Median relative errors of the one-step deletion quantities at size ``N``.

    For each simulated binary exchangeable dataset, every cluster is deleted
    and the model refitted. ``dbeta_median`` is the median over clusters of
    ``|C_i - (b - b_(i))| / |b - b_(i)|``; ``press_median`` is the median over
    datasets of ``|GPC - P| / P`` where ``P = sum e_(i)' V_i^-1 e_(i)`` uses the
    refitted means and the full-data ``V_i``.
    """
    from .criteria import gpc

    options = options or FitOptions(phi_mode="fixed-one")
    spec = ScenarioSpec("binary", "balanced", N, "exch", alpha, seed=seed)
    dbeta_err, press_err = [], []
    done = 0
    with quiet():
        for k in range(datasets):
            data = generate_dataset(spec, k)
            try:
                full = engine.fit(data, "binary", "exch", options)
                if not full.converged:
                    continue
                C = engine.one_step_deletions(full)
                total = 0.0
                errs = []
                for i in range(N):
                    refit = engine.exact_deletion(data, "binary", "exch", options, i, full)
                    if not refit.converged:
                        raise GeePressError("deletion refit did not converge")
                    d = full.beta - refit.beta
                    errs.append(np.linalg.norm(C[i] - d) / np.linalg.norm(d))
                    c = data.clusters[i]
                    e = c.y - full.family.inverse_link(c.X @ refit.beta)
                    total += float(e @ full.cluster(i).Vinv @ e)
                value = gpc(full)
            except GeePressError:
                continue
            dbeta_err.extend(errs)
            press_err.append(abs(value - total) / total)
            done += 1
    return DeletionAccuracy(N, float(np.median(dbeta_err)), float(np.median(press_err)), done)


# ---------------------------------------------------------------- configuration


CONFIG_KEYS = ("tables", "scenarios", "reps", "seed", "out_dir", "jobs", "candidates",
               "criteria", "sample_sizes", "phi")


@dataclass
class ReportConfig:
    """Settings for ``replicate_report``.

    ``tables`` are ids "1".."9" and "B1".."B8"; ``scenarios`` are extra
    cell descriptors ``family,balance,structure,alpha,N`` run with
    ``candidates``.
    """

    tables: tuple = ()
    scenarios: tuple = ()
    reps: int = 1000
    seed: int = DEFAULT_SEED
    out_dir: str = "geepress-report"
    jobs: int = 1
    candidates: tuple = KINDS
    criteria: tuple = CRITERIA
    sample_sizes: tuple = (50, 100)
    phi: str = "fixed-one"

    def __post_init__(self):
        self.tables = tuple(str(t).strip().upper() for t in self.tables)
        bad = [t for t in self.tables if t not in TABLES]
        if bad:
            raise ParameterError(f"unknown table ids {bad}; expected {sorted(TABLES)}")
        self.scenarios = tuple(ScenarioSpec.parse(s) if isinstance(s, str) else s for s in self.scenarios)
        self.candidates = tuple(normalize_kind(c) for c in self.candidates)
        bad = [c for c in self.criteria if c not in CRITERIA]
        if bad:
            raise ParameterError(f"unknown criteria {bad}")
        self.sample_sizes = tuple(int(n) for n in self.sample_sizes)
        if int(self.reps) < 0 or int(self.jobs) < 1:
            raise ParameterError("reps must be >= 0 and jobs >= 1")
        self.reps, self.jobs, self.seed = int(self.reps), int(self.jobs), int(self.seed)
        FitOptions(phi_mode=self.phi)


def _split(value):
    return tuple(v.strip() for v in value.replace(";", ",").split(",") if v.strip())


def parse_config(text, env=None) -> ReportConfig:
    """Parse ``key = value`` lines (``#`` starts a comment).

    ``scenarios`` entries are separated by ``;`` or given on repeated
    ``scenario = ...`` lines. Without a ``seed`` key the ``GEEPRESS_SEED``
    environment variable is used, then the package default.
    """
    env = os.environ if env is None else env
    values: dict = {}
    scenarios = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise InputError(f"config line {lineno}: expected 'key = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        key = key.lower().replace("-", "_")
        if key == "scenario":
            scenarios.append(value)
            continue
        if key not in CONFIG_KEYS:
            raise InputError(f"config line {lineno}: unknown key {key!r}")
        if key == "scenarios":
            scenarios.extend(s.strip() for s in value.split(";") if s.strip())
        else:
            values[key] = value
    kwargs = {}
    try:
        for key in ("tables", "candidates", "criteria", "sample_sizes"):
            if key in values:
                kwargs[key] = _split(values[key])
        for key in ("reps", "jobs", "seed"):
            if key in values:
                kwargs[key] = int(values[key])
        if "seed" not in kwargs and env.get("GEEPRESS_SEED"):
            kwargs["seed"] = int(env["GEEPRESS_SEED"])
        for key in ("out_dir", "phi"):
            if key in values:
                kwargs[key] = values[key]
        if "criteria" in kwargs:
            kwargs["criteria"] = tuple(c.upper() for c in kwargs["criteria"])
        return ReportConfig(scenarios=tuple(scenarios), **kwargs)
    except (ValueError, GeePressError) as exc:
        raise InputError(f"invalid config: {exc}") from exc


def load_config(path, env=None) -> ReportConfig:
    return parse_config(Path(path).read_text(encoding="utf-8"), env)


# ---------------------------------------------------------------- reports


def _fmt(x, digits=3):
    if x is None or (isinstance(x, float) and not math.isfinite(x)):
        return ""
    return f"{x:.{digits}f}"


def _cells_for_table(table_id, config):
    family, balance, alpha, candidates = TABLES[table_id]
    for truth in table_truths(table_id):
        for N in config.sample_sizes:
            spec = ScenarioSpec(family, balance, N, truth, alpha, reps=config.reps, seed=config.seed)
            yield truth, N, spec, candidates


def _write_csv(path, header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(header)
    writer.writerows(rows)
    path.write_bytes(buf.getvalue().encode("utf-8"))


SELECTION_HEADER = ("table", "true_structure", "N", "criterion", "working_structure", "proportion",
                    "reference", "deviation", "flag", "completed", "failed")
MSE_HEADER = ("table", "true_structure", "N", "parameter", "working_structure", "mse", "reference",
              "deviation", "flag", "completed", "failed")
CELL_HEADER = ("cell", "candidates", "replicates", "completed", "failed", "degraded")


def _proportion_tolerance(p, n):
    return max(PROPORTION_TOLERANCE, 3.0 * math.sqrt(max(p * (1 - p), 0.0) / max(n, 1)))


def replicate_report(config: ReportConfig, progress=None) -> dict:
    """Run the configured cells and write the report bundle to ``config.out_dir``.

    Writes ``table_<id>.csv`` per requested table, ``scenarios_selection.csv``
    and ``scenarios_mse.csv`` for ad hoc cells, ``cells.csv`` with replicate
    accounting, and ``summary.md``. Outputs contain no timings, so reruns
    with the same seed are byte-identical. Returns ``{cell_key: ScenarioResult}``.
    """
    out = Path(config.out_dir)
    try:
        out.mkdir(parents=True, exist_ok=True)
        probe = out / ".write-test"
        probe.write_bytes(b"")
        probe.unlink()
    except OSError as exc:
        raise InputError(f"cannot write to output directory {out}: {exc}") from exc

    options = FitOptions(phi_mode=config.phi)
    results: dict = {}

    def run(spec, candidates):
        key = (spec.label, tuple(candidates))
        if key not in results:
            res = run_scenario(spec, candidates, config.criteria, config.jobs, options)
            results[key] = res
            if progress:
                progress(res)
        return results[key]

    md = ["# Simulation replication report", "",
          f"Replicates per cell: {config.reps}; seed: {config.seed}; phi: {config.phi}.", ""]
    if config.tables:
        md += ["Cells show `observed (reference)`; `*` marks a deviation beyond tolerance "
               f"(proportions: max({PROPORTION_TOLERANCE}, 3 binomial SE); MSE: "
               f"max({MSE_TOLERANCE}, 3 Monte Carlo SE)). Bold marks, for each criterion, "
               "the working structure it selected most often.", ""]

    for table_id in config.tables:
        is_mse = table_id.startswith("B")
        rows = []
        md += [f"## Table {table_id}", ""]
        for truth, N, spec, candidates in _cells_for_table(table_id, config):
            if config.reps == 0:
                continue
            res = run(spec, candidates)
            n = res.replicates_completed
            names = [label(c) for c in candidates]
            md += [f"### True {label(truth)}, N = {N} ({n} completed, {res.replicates_failed} failed"
                   + (", degraded" if res.degraded else "") + ")", "",
                   "| " + ("parameter" if is_mse else "criterion") + " | " + " | ".join(names) + " |",
                   "|---" * (len(names) + 1) + "|"]
            if is_mse:
                se = res.mse_standard_error()
                for pi, param in enumerate(PARAMETERS):
                    ref = MSE[table_id].get((truth, N), {}).get(param)
                    cells = []
                    for j, cand in enumerate(candidates):
                        v = float(res.mse[pi, j])
                        r = ref[KINDS.index(cand)] if ref else None
                        dev = None if r is None else v - r
                        tol = max(MSE_TOLERANCE, 3.0 * float(se[pi, j]))
                        flag = "" if dev is None else ("deviates" if abs(dev) > tol else "ok")
                        rows.append((table_id, label(truth), N, param, label(cand), _fmt(v, 6),
                                     _fmt(r), _fmt(dev, 6), flag, n, res.replicates_failed))
                        cells.append(f"{_fmt(v)} ({_fmt(r)})" + ("*" if flag == "deviates" else ""))
                    md.append(f"| {param} | " + " | ".join(cells) + " |")
            else:
                props = res.selection_proportions
                for ci, crit in enumerate(res.criteria):
                    ref = SELECTION[table_id].get((truth, N), {}).get(crit)
                    best = int(np.argmax(props[ci]))
                    cells = []
                    for j, cand in enumerate(candidates):
                        v = float(props[ci, j])
                        r = ref[KINDS.index(cand)] if ref else None
                        dev = None if r is None else v - r
                        flag = "" if dev is None else (
                            "deviates" if abs(dev) > _proportion_tolerance(v, n) else "ok")
                        rows.append((table_id, label(truth), N, crit, label(cand), _fmt(v, 6),
                                     _fmt(r), _fmt(dev, 6), flag, n, res.replicates_failed))
                        text = f"{_fmt(v)} ({_fmt(r)})" + ("*" if flag == "deviates" else "")
                        cells.append(f"**{text}**" if j == best else text)
                    md.append(f"| {crit} | " + " | ".join(cells) + " |")
            md.append("")
        _write_csv(out / f"table_{table_id}.csv", MSE_HEADER if is_mse else SELECTION_HEADER, rows)

    sel_rows, mse_rows = [], []
    if config.scenarios:
        md += ["## Additional scenarios", ""]
    for spec in config.scenarios:
        spec = ScenarioSpec(spec.family, spec.balance, spec.N, spec.structure, spec.alpha,
                            reps=config.reps, seed=config.seed)
        if config.reps == 0:
            continue
        res = run(spec, config.candidates)
        for ci, crit in enumerate(res.criteria):
            for j, cand in enumerate(res.candidates):
                sel_rows.append((spec.label, label(spec.structure), spec.N, crit, label(cand),
                                 _fmt(float(res.selection_proportions[ci, j]), 6), "", "", "",
                                 res.replicates_completed, res.replicates_failed))
        for pi, param in enumerate(PARAMETERS):
            for j, cand in enumerate(res.candidates):
                mse_rows.append((spec.label, label(spec.structure), spec.N, param, label(cand),
                                 _fmt(float(res.mse[pi, j]), 6), "", "", "",
                                 res.replicates_completed, res.replicates_failed))
        names = [label(c) for c in res.candidates]
        md += [f"### {spec.label}", "", "| criterion | " + " | ".join(names) + " |",
               "|---" * (len(names) + 1) + "|"]
        for ci, crit in enumerate(res.criteria):
            md.append(f"| {crit} | " + " | ".join(_fmt(float(v)) for v in res.selection_proportions[ci]) + " |")
        md.append("")
    if config.scenarios:
        _write_csv(out / "scenarios_selection.csv", SELECTION_HEADER, sel_rows)
        _write_csv(out / "scenarios_mse.csv", MSE_HEADER, mse_rows)

    cell_rows = [(spec_label, "/".join(label(c) for c in cands), r.replicates, r.replicates_completed,
                  r.replicates_failed, int(r.degraded)) for (spec_label, cands), r in results.items()]
    _write_csv(out / "cells.csv", CELL_HEADER, cell_rows)
    (out / "summary.md").write_bytes(("\n".join(md).rstrip() + "\n").encode("utf-8"))
    return results
