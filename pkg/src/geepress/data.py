"""Longitudinal data containers and the long-format CSV schema.

The CSV layout is one row per observation with columns ``id, time, y``
followed by covariates ``x1 .. xp``. Rows of a subject are contiguous and
``time`` is strictly increasing within a subject.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .exceptions import InputError


@dataclass(frozen=True, eq=False)
class Cluster:
    """One subject: responses ``y`` (n,), covariates ``X`` (n, p), wave times (n,)."""

    id: object
    y: np.ndarray
    X: np.ndarray
    waves: np.ndarray

    def __post_init__(self):
        y = np.array(self.y, dtype=float).reshape(-1)
        X = np.array(self.X, dtype=float)
        if X.ndim == 1:
            X = X.reshape(-1, 1)
        waves = np.array(self.waves, dtype=float).reshape(-1)
        n = y.shape[0]
        if n < 1:
            raise InputError(f"cluster {self.id!r} has no observations")
        if X.shape[0] != n or waves.shape[0] != n:
            raise InputError(f"cluster {self.id!r}: y, X and waves disagree in length")
        if not (np.all(np.isfinite(X)) and np.all(np.isfinite(y)) and np.all(np.isfinite(waves))):
            raise InputError(f"cluster {self.id!r} contains non-finite values")
        if np.any(np.diff(waves) <= 0):
            raise InputError(f"cluster {self.id!r}: wave times must be strictly increasing")
        for arr in (y, X, waves):
            arr.setflags(write=False)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "X", X)
        object.__setattr__(self, "waves", waves)

    @property
    def n(self) -> int:
        return self.y.shape[0]


@dataclass(frozen=True, eq=False)
class PatternBlock:
    """Clusters observed at the same wave times, stacked along axis 0."""

    positions: np.ndarray  # grid indices of the waves, (n,)
    waves: np.ndarray  # (n,)
    index: np.ndarray  # cluster indices into the dataset, (G,)
    X: np.ndarray  # (G, n, p)
    y: np.ndarray  # (G, n)


@dataclass(frozen=True, eq=False)
class LongitudinalDataset:
    """A collection of clusters sharing covariate count ``p`` and a wave grid."""

    clusters: tuple
    wave_grid: tuple = ()
    family: str | None = None
    columns: tuple = ()

    def __post_init__(self):
        clusters = tuple(self.clusters)
        if not clusters:
            raise InputError("dataset has no clusters")
        p = clusters[0].X.shape[1]
        if any(c.X.shape[1] != p for c in clusters):
            raise InputError("clusters disagree on the number of covariates")
        grid = self.wave_grid or sorted({float(t) for c in clusters for t in c.waves})
        grid = tuple(float(t) for t in grid)
        if any(b <= a for a, b in zip(grid, grid[1:])):
            raise InputError("wave grid must be strictly increasing")
        gset = set(grid)
        for c in clusters:
            if not gset.issuperset(c.waves.tolist()):
                raise InputError(f"cluster {c.id!r} has wave times outside the wave grid")
        if sum(c.n for c in clusters) <= p:
            raise InputError("total number of observations must exceed p")
        object.__setattr__(self, "clusters", clusters)
        object.__setattr__(self, "wave_grid", grid)
        object.__setattr__(self, "columns", tuple(self.columns) or tuple(f"x{j + 1}" for j in range(p)))

    @property
    def p(self) -> int:
        return self.clusters[0].X.shape[1]

    @property
    def n_clusters(self) -> int:
        return len(self.clusters)

    @property
    def n_obs(self) -> int:
        return sum(c.n for c in self.clusters)

    @cached_property
    def patterns(self):
        """Clusters grouped by wave pattern, stacked for batched linear algebra."""
        index = {t: k for k, t in enumerate(self.wave_grid)}
        groups: dict[tuple, list[int]] = {}
        for i, c in enumerate(self.clusters):
            key = tuple(index[float(t)] for t in c.waves)
            groups.setdefault(key, []).append(i)
        grid = np.asarray(self.wave_grid)
        blocks = []
        for key, members in groups.items():
            pos = np.array(key)
            blocks.append(PatternBlock(
                positions=pos,
                waves=grid[pos],
                index=np.array(members),
                X=np.stack([self.clusters[i].X for i in members]),
                y=np.stack([self.clusters[i].y for i in members]),
            ))
        return blocks

    def subset(self, keep):
        """Dataset restricted to the cluster indices in ``keep`` (same wave grid)."""
        keep = list(keep)
        return LongitudinalDataset(
            tuple(self.clusters[i] for i in keep), self.wave_grid, self.family, self.columns
        )

    def without(self, index):
        if self.n_clusters < 2:
            raise InputError("cannot delete a cluster from a single-cluster dataset")
        return self.subset(i for i in range(self.n_clusters) if i != index)

    def permuted(self, order):
        return self.subset(order)

    def with_design(self, X_by_cluster, columns=()):
        clusters = tuple(
            Cluster(c.id, c.y, X, c.waves) for c, X in zip(self.clusters, X_by_cluster)
        )
        return LongitudinalDataset(clusters, self.wave_grid, self.family, columns)

    def add_intercept(self):
        return self.with_design(
            [np.column_stack([np.ones(c.n), c.X]) for c in self.clusters],
            ("intercept",) + self.columns,
        )

    def long_arrays(self):
        """(ids, time, y, X) stacked in cluster order."""
        ids = np.concatenate([np.repeat(np.array([c.id], dtype=object), c.n) for c in self.clusters])
        time = np.concatenate([c.waves for c in self.clusters])
        y = np.concatenate([c.y for c in self.clusters])
        X = np.vstack([c.X for c in self.clusters])
        return ids, time, y, X

    @classmethod
    def from_long(cls, y, X, groups, time=None, wave_grid=(), family=None, columns=()):
        """Build a dataset from stacked arrays; rows of a group must be contiguous."""
        y = np.asarray(y, dtype=float).reshape(-1)
        X = np.asarray(X, dtype=float)
        if X.ndim == 1:
            X = X.reshape(-1, 1)
        groups = np.asarray(groups)
        if X.shape[0] != y.shape[0] or groups.shape[0] != y.shape[0]:
            raise InputError("y, X and groups must have the same number of rows")
        if time is None:
            time = np.empty(y.shape[0])
            for g in _group_runs(groups):
                time[g] = np.arange(1, g.stop - g.start + 1)
        time = np.asarray(time, dtype=float).reshape(-1)
        if time.shape[0] != y.shape[0]:
            raise InputError("time must have one entry per row")
        runs = _group_runs(groups)
        seen = set()
        clusters = []
        for sl in runs:
            gid = groups[sl.start].item() if hasattr(groups[sl.start], "item") else groups[sl.start]
            if gid in seen:
                raise InputError(f"rows for id {gid!r} are not contiguous")
            seen.add(gid)
            clusters.append(Cluster(gid, y[sl], X[sl], time[sl]))
        return cls(tuple(clusters), wave_grid, family, columns)


def _group_runs(groups):
    runs = []
    start = 0
    for k in range(1, len(groups) + 1):
        if k == len(groups) or groups[k] != groups[start]:
            runs.append(slice(start, k))
            start = k
    return runs


def _validate_response(y, family, where):
    if family in ("binary", "binary-logit") and y not in (0.0, 1.0):
        raise InputError(f"{where}: binary response must be 0 or 1, got {y:g}")
    if family in ("poisson", "poisson-log") and (y < 0 or y != math.floor(y)):
        raise InputError(f"{where}: poisson response must be a non-negative integer, got {y:g}")


def read_long_csv(source, family=None) -> LongitudinalDataset:
    """Parse the long-format CSV schema; errors cite the 1-based file line."""
    if hasattr(source, "read"):
        text = source.read()
    else:
        with open(source, newline="", encoding="utf-8") as fh:
            text = fh.read()
    reader = csv.reader(io.StringIO(text))
    try:
        header = [h.strip() for h in next(reader)]
    except StopIteration:
        raise InputError("empty CSV file") from None
    if header[:3] != ["id", "time", "y"] or len(header) < 4:
        raise InputError("CSV header must start with id,time,y followed by covariate columns")
    covariates = header[3:]
    ids, times, ys, xs = [], [], [], []
    last_time: dict[str, tuple[float, int]] = {}
    previous_id = None
    for lineno, row in enumerate(reader, start=2):
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != len(header):
            raise InputError(f"line {lineno}: expected {len(header)} cells, got {len(row)}")
        cells = [cell.strip() for cell in row]
        if any(cell == "" or cell.upper() == "NA" for cell in cells):
            raise InputError(f"line {lineno}: missing cell")
        try:
            values = [float(cell) for cell in cells[1:]]
        except ValueError:
            raise InputError(f"line {lineno}: non-numeric value") from None
        if not all(math.isfinite(v) for v in values):
            raise InputError(f"line {lineno}: non-finite value")
        cid, t, yv = cells[0], values[0], values[1]
        if t < 0:
            raise InputError(f"line {lineno}: time must be >= 0 (id {cid})")
        _validate_response(yv, family, f"line {lineno}")
        if cid != previous_id and cid in last_time:
            raise InputError(f"line {lineno}: rows for id {cid} are not grouped together")
        if cid in last_time and t <= last_time[cid][0]:
            raise InputError(
                f"line {lineno}: time not strictly increasing within id {cid} "
                f"(previous time {last_time[cid][0]:g} at line {last_time[cid][1]})"
            )
        last_time[cid] = (t, lineno)
        previous_id = cid
        ids.append(cid)
        times.append(t)
        ys.append(yv)
        xs.append(values[2:])
    if not ids:
        raise InputError("CSV file has no data rows")
    return LongitudinalDataset.from_long(
        np.array(ys), np.array(xs), np.array(ids, dtype=object), np.array(times),
        family=family, columns=tuple(covariates),
    )


def _fmt(v) -> str:
    v = float(v)
    if v == int(v) and abs(v) < 1e15:
        return str(int(v))
    return repr(v)


def write_long_csv(dataset: LongitudinalDataset, target) -> None:
    """Write ``dataset`` in the long-format schema (RFC 4180, UTF-8)."""
    own = not hasattr(target, "write")
    fh = open(target, "w", newline="", encoding="utf-8") if own else target
    try:
        writer = csv.writer(fh, lineterminator="\r\n")
        writer.writerow(["id", "time", "y", *dataset.columns])
        for c in dataset.clusters:
            for t, yv, x in zip(c.waves, c.y, c.X):
                writer.writerow([c.id, _fmt(t), _fmt(yv), *(_fmt(v) for v in x)])
    finally:
        if own:
            fh.close()
