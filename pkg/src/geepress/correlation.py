"""Working correlation structures and their realisation on wave patterns."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from .exceptions import NotPositiveDefiniteError, ParameterError

logger = logging.getLogger(__name__)

KINDS = ("indep", "ar1", "exch", "un")
# Tie-break order: fewer correlation parameters first.
SIMPLICITY = {kind: rank for rank, kind in enumerate(KINDS)}
ALPHA_BOUND = 0.99
EIG_FLOOR = 1e-6

_LABELS = {"indep": "Indep", "ar1": "AR1", "exch": "Exch", "un": "UN"}


def normalize_kind(kind) -> str:
    k = str(kind).strip().lower().replace("(", "").replace(")", "")
    k = {"independence": "indep", "independent": "indep", "exchangeable": "exch",
         "unstructured": "un", "ar": "ar1", "ar-1": "ar1"}.get(k, k)
    if k not in KINDS:
        raise ParameterError(f"unknown working correlation {kind!r}; expected one of {KINDS}")
    return k


def label(kind) -> str:
    return _LABELS[normalize_kind(kind)]


def is_positive_definite(matrix) -> bool:
    try:
        np.linalg.cholesky(matrix)
    except np.linalg.LinAlgError:
        return False
    return True


def repair_pd(matrix, floor=EIG_FLOOR, what="correlation matrix", level=logging.WARNING):
    """Clip eigenvalues at ``floor`` and rescale back to unit diagonal.

    Returns the repaired matrix and whether a repair was needed. Repairs
    are logged at WARNING level.
    """
    matrix = np.asarray(matrix, dtype=float)
    matrix = (matrix + matrix.T) / 2.0
    vals, vecs = np.linalg.eigh(matrix)
    if vals.min() >= floor:
        return matrix, False
    clipped = (vecs * np.maximum(vals, floor)) @ vecs.T
    d = np.sqrt(np.diag(clipped))
    repaired = clipped / np.outer(d, d)
    repaired = (repaired + repaired.T) / 2.0
    np.fill_diagonal(repaired, 1.0)
    logger.log(level, "repaired non-PD %s (min eigenvalue %.3g)", what, vals.min())
    return repaired, True


def _check_scalar_alpha(kind, alpha):
    if alpha is None:
        raise ParameterError(f"{label(kind)} requires a scalar alpha")
    alpha = float(alpha)
    if not -1.0 < alpha < 1.0:
        raise ParameterError(f"alpha={alpha} outside (-1, 1) for {label(kind)}")
    return alpha


def _check_un_alpha(alpha, size=None):
    if alpha is None:
        raise ParameterError("UN requires a T x T correlation matrix")
    alpha = np.asarray(alpha, dtype=float)
    if alpha.ndim != 2 or alpha.shape[0] != alpha.shape[1]:
        raise ParameterError("UN alpha must be a square matrix")
    if size is not None and alpha.shape[0] != size:
        raise ParameterError(f"UN alpha is {alpha.shape[0]}x{alpha.shape[0]}, wave grid has {size} times")
    if not np.array_equal(alpha, alpha.T):
        raise ParameterError("UN alpha must be symmetric")
    if not np.all(np.diag(alpha) == 1.0):
        raise ParameterError("UN alpha must have unit diagonal")
    off = alpha[~np.eye(alpha.shape[0], dtype=bool)]
    if off.size and np.max(np.abs(off)) >= 1.0:
        raise ParameterError("UN off-diagonal entries must lie in (-1, 1)")
    return alpha


def wave_positions(waves, wave_grid):
    """Indices of ``waves`` inside ``wave_grid``; raises if any is missing."""
    grid = np.asarray(wave_grid, dtype=float)
    waves = np.asarray(waves, dtype=float)
    pos = np.searchsorted(grid, waves)
    pos = np.clip(pos, 0, len(grid) - 1)
    if not np.array_equal(grid[pos], waves):
        missing = waves[grid[pos] != waves]
        raise ParameterError(f"wave times {missing.tolist()} are not on the wave grid")
    return pos


def build_correlation(kind, alpha, waves, wave_grid=None, cluster=None):
    """Realise a working correlation matrix on one cluster's wave times.

    AR1 uses the true time gap ``alpha ** |t_j - t_k|``; UN looks up the
    principal submatrix of the grid-level matrix ``alpha``.
    """
    kind = normalize_kind(kind)
    waves = np.asarray(waves, dtype=float)
    n = waves.shape[0]
    if kind == "indep":
        return np.eye(n)
    if kind == "exch":
        a = _check_scalar_alpha(kind, alpha)
        R = np.full((n, n), a)
        np.fill_diagonal(R, 1.0)
    elif kind == "ar1":
        a = _check_scalar_alpha(kind, alpha)
        gaps = np.abs(waves[:, None] - waves[None, :])
        if a < 0 and not np.all(gaps == np.round(gaps)):
            raise ParameterError("negative AR1 alpha is undefined for non-integer time gaps")
        R = np.power(a, gaps) if a != 0 else (gaps == 0).astype(float)
    else:
        if wave_grid is None:
            raise ParameterError("UN requires the dataset wave grid")
        full = _check_un_alpha(alpha, len(wave_grid))
        pos = wave_positions(waves, wave_grid)
        R = full[np.ix_(pos, pos)].copy()
    if not is_positive_definite(R):
        R, _ = repair_pd(R, what=f"{label(kind)} matrix for cluster {cluster}")
        if not is_positive_definite(R):
            raise NotPositiveDefiniteError(
                f"{label(kind)} working correlation for cluster {cluster} is not positive definite",
                cluster=cluster,
            )
    return R


@dataclass(frozen=True)
class WorkingCorrelation:
    """A working correlation structure with its parameter value.

    ``alpha`` is a float for AR1/Exch, a T x T matrix on ``wave_grid`` for
    UN and ``None`` for Indep.
    """

    kind: str
    alpha: object = None
    wave_grid: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "kind", normalize_kind(self.kind))
        object.__setattr__(self, "wave_grid", tuple(float(t) for t in self.wave_grid))
        if self.kind in ("ar1", "exch"):
            object.__setattr__(self, "alpha", _check_scalar_alpha(self.kind, self.alpha))
        elif self.kind == "un":
            a = _check_un_alpha(self.alpha, len(self.wave_grid) or None).copy()
            a.setflags(write=False)
            object.__setattr__(self, "alpha", a)
        else:
            object.__setattr__(self, "alpha", None)

    @property
    def n_params(self) -> int:
        if self.kind == "indep":
            return 0
        if self.kind == "un":
            T = self.alpha.shape[0]
            return T * (T - 1) // 2
        return 1

    def matrix(self, waves, cluster=None):
        return build_correlation(self.kind, self.alpha, waves, self.wave_grid or None, cluster)
