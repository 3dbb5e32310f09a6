"""Fisher-scoring GEE fits with moment estimates of the association and scale.

All per-cluster algebra runs on :class:`~geepress.data.PatternBlock` stacks,
so clusters sharing a wave pattern are processed in one batched call.

Estimator conventions
---------------------
Pearson residuals are ``r_it = (y_it - mu_it) / sqrt(h(mu_it))``. With
``K = sum n_i`` and ``p`` regression parameters:

* scale: ``phi = sum r_it^2 / (K - p)``;
* exchangeable: ``alpha = sum_{i, t<t'} r_it r_it' / (phi (P - p))`` with
  ``P = sum n_i (n_i - 1) / 2``;
* AR(1), unit gaps between consecutive observations: the same ratio over
  consecutive pairs;
* AR(1), any other spacing: ``alpha`` minimises
  ``sum (r_j r_k / phi - alpha ** d_jk)^2`` over consecutive pairs on
  ``[0, 0.99]`` by golden-section search;
* unstructured: one ratio per pair of grid times, each with its own
  ``(count - p)`` denominator, followed by a positive-definite repair.

Scalar estimates are clamped to ``[-0.99, 0.99]``. In ``fixed-one`` scale
mode the moment estimators use ``phi = 1``.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field, replace

import numpy as np

from .correlation import ALPHA_BOUND, build_correlation, normalize_kind, repair_pd
from .data import LongitudinalDataset
from .exceptions import (
    DeletionSingularError,
    InputError,
    RankDeficiencyError,
    StructureInfeasibleError,
)
from .families import get_family

logger = logging.getLogger(__name__)

# A Fisher step this large means the iteration has left any sensible region.
DIVERGENCE_STEP = 1e3

PHI_MODES = ("estimate", "fixed-one")
_COND_LIMIT = 1e13


@dataclass(frozen=True)
class FitOptions:
    """Iteration controls for :func:`fit`."""

    max_iter: int = 200
    tol: float = 1e-8
    phi_mode: str = "estimate"
    alpha_bound: float = ALPHA_BOUND

    def __post_init__(self):
        mode = {"fixed1": "fixed-one", "fixed": "fixed-one", "est": "estimate"}.get(
            self.phi_mode, self.phi_mode
        )
        object.__setattr__(self, "phi_mode", mode)
        if mode not in PHI_MODES:
            raise ValueError(f"phi_mode must be one of {PHI_MODES}")
        if not self.tol > 0:
            raise ValueError("tol must be positive")
        if int(self.max_iter) < 1:
            raise ValueError("max_iter must be >= 1")
        if not 0 < self.alpha_bound < 1:
            raise ValueError("alpha_bound must lie in (0, 1)")


@dataclass(frozen=True, eq=False)
class BlockCache:
    """Fitted quantities for one wave-pattern block (G clusters of size n)."""

    index: np.ndarray
    waves: np.ndarray
    positions: np.ndarray
    X: np.ndarray
    y: np.ndarray
    mu: np.ndarray  # (G, n)
    resid: np.ndarray  # (G, n)
    A: np.ndarray  # (G, n) variance function
    L: np.ndarray  # (G, n) link derivative
    D: np.ndarray  # (G, n, p)
    R: np.ndarray  # (n, n)
    V: np.ndarray  # (G, n, n)
    Vinv: np.ndarray  # (G, n, n)
    H: np.ndarray  # (G, n, n)


@dataclass(frozen=True, eq=False)
class ClusterCache:
    mu: np.ndarray
    resid: np.ndarray
    A: np.ndarray
    L: np.ndarray
    D: np.ndarray
    V: np.ndarray
    Vinv: np.ndarray
    H: np.ndarray
    waves: np.ndarray


@dataclass(frozen=True, eq=False)
class GeeFit:
    """A converged (or abandoned) GEE fit with its per-cluster caches."""

    family: object
    kind: str
    beta: np.ndarray
    alpha: object
    phi: float
    model_cov: np.ndarray
    sandwich_cov: np.ndarray
    blocks: tuple
    iterations: int
    converged: bool
    ql: float
    max_delta: float
    ee_norm: float
    n_clusters: int
    n_obs: int
    wave_grid: tuple
    options: FitOptions
    alpha_repaired: bool = False
    _where: dict = field(default_factory=dict, repr=False)

    @property
    def p(self) -> int:
        return self.beta.shape[0]

    @property
    def bse_model(self):
        return np.sqrt(np.diag(self.model_cov))

    @property
    def bse_robust(self):
        return np.sqrt(np.diag(self.sandwich_cov))

    def cluster(self, i) -> ClusterCache:
        """Cached fitted quantities for cluster ``i`` (dataset order)."""
        if not 0 <= i < self.n_clusters:
            raise IndexError(f"cluster index {i} out of range for {self.n_clusters} clusters")
        b, g = self._where[i]
        blk = self.blocks[b]
        return ClusterCache(
            blk.mu[g], blk.resid[g], blk.A[g], blk.L[g], blk.D[g],
            blk.V[g], blk.Vinv[g], blk.H[g], blk.waves,
        )

    def M(self):
        """Model-based information sum_i D_i' V_i^-1 D_i, recomputed from caches."""
        return _sym(sum(np.einsum("gnp,gnm,gmq->pq", b.D, b.Vinv, b.D) for b in self.blocks))


def _sym(a):
    return (a + a.T) / 2.0


def _freeze(*arrays):
    for a in arrays:
        if isinstance(a, np.ndarray):
            a.setflags(write=False)


def _check_information(M):
    if not np.all(np.isfinite(M)):
        raise RankDeficiencyError("information matrix has non-finite entries")
    cond = np.linalg.cond(M)
    if not np.isfinite(cond) or cond > _COND_LIMIT:
        raise RankDeficiencyError(
            f"information matrix sum(D' V^-1 D) is singular (condition number {cond:.3g})"
        )


# ---------------------------------------------------------------- moments


def estimate_phi(pearson_residuals, total_obs, p, mode="estimate") -> float:
    """Moment estimate ``sum r^2 / (total_obs - p)``; 1 in ``fixed-one`` mode."""
    if mode in ("fixed-one", "fixed1"):
        return 1.0
    if total_obs <= p:
        raise InputError("total number of observations must exceed p")
    ss = sum(float(np.sum(np.square(r))) for r in _as_list(pearson_residuals))
    phi = ss / (total_obs - p)
    # A perfect fit leaves phi = 0; keep V invertible.
    return max(phi, np.finfo(float).tiny)


def _as_list(residuals):
    if isinstance(residuals, np.ndarray) and residuals.dtype != object:
        return [residuals]
    return list(residuals)


def _golden_section(f, lo, hi, tol=1e-8):
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = f(d)
    x = (a + b) / 2.0
    # The bounds themselves are admissible minimisers.
    return min((lo, x, hi), key=f)


def _residual_blocks(residual_sets, wave_grid):
    """Normalise residual input to a list of (grid positions, (G, n) array)."""
    grid = {float(t): k for k, t in enumerate(wave_grid)}
    out = []
    for item in residual_sets:
        if isinstance(item, tuple):
            waves, r = item
            r = np.atleast_2d(np.asarray(r, dtype=float))
            pos = np.array([grid[float(t)] for t in waves])
            out.append((pos, r))
        else:
            raise TypeError("residual sets must be (waves, residuals) pairs")
    return out


def estimate_alpha(working_kind, residual_sets, phi, p, wave_grid, bound=ALPHA_BOUND):
    """Method-of-moments association estimate from Pearson residuals.

    Parameters
    ----------
    residual_sets : sequence of (waves, r)
        ``r`` is a residual vector (n,) or a stack (G, n) of clusters all
        observed at ``waves``.
    phi : float
        Scale used to standardise the cross-products.
    p : int
        Number of regression parameters (degrees-of-freedom correction).

    Returns
    -------
    float for AR1/Exch, a (T, T) matrix for UN, ``None`` for Indep, plus a
    flag telling whether a positive-definite repair was applied (UN only).
    """
    kind = normalize_kind(working_kind)
    if kind == "indep":
        return None, False
    blocks = _residual_blocks(residual_sets, wave_grid)
    grid = np.asarray(wave_grid, dtype=float)
    if kind == "exch":
        num, pairs = 0.0, 0
        for _, r in blocks:
            n = r.shape[1]
            s = r.sum(axis=1)
            num += float(np.sum(s * s - np.sum(r * r, axis=1)) / 2.0)
            pairs += r.shape[0] * n * (n - 1) // 2
        if pairs <= p:
            raise StructureInfeasibleError(
                f"exchangeable structure needs more than p={p} within-cluster pairs, found {pairs}"
            )
        return float(np.clip(num / (phi * (pairs - p)), -bound, bound)), False
    if kind == "ar1":
        prods, gaps = [], []
        for pos, r in blocks:
            if r.shape[1] < 2:
                continue
            prods.append((r[:, :-1] * r[:, 1:]).ravel())
            d = np.diff(grid[pos])
            gaps.append(np.broadcast_to(d, (r.shape[0], d.shape[0])).ravel())
        prods = np.concatenate(prods) if prods else np.empty(0)
        gaps = np.concatenate(gaps) if gaps else np.empty(0)
        if prods.size <= p:
            raise StructureInfeasibleError(
                f"AR1 structure needs more than p={p} consecutive pairs, found {prods.size}"
            )
        if np.all(gaps == 1.0):
            return float(np.clip(prods.sum() / (phi * (prods.size - p)), -bound, bound)), False
        c = prods / phi

        def loss(a):
            return float(np.sum((c - np.power(a, gaps)) ** 2))

        return float(_golden_section(loss, 0.0, bound)), False
    T = grid.shape[0]
    num = np.zeros((T, T))
    cnt = np.zeros((T, T), dtype=int)
    for pos, r in blocks:
        idx = np.ix_(pos, pos)
        num[idx] += np.einsum("gj,gk->jk", r, r)
        cnt[idx] += r.shape[0]
    alpha = np.eye(T)
    for a in range(T):
        for b in range(a + 1, T):
            if cnt[a, b] <= p:
                raise StructureInfeasibleError(
                    f"UN structure: wave pair ({grid[a]:g}, {grid[b]:g}) observed together in "
                    f"{cnt[a, b]} clusters, need more than p={p}",
                    pair=(grid[a], grid[b]),
                )
            v = np.clip(num[a, b] / (phi * (cnt[a, b] - p)), -bound, bound)
            alpha[a, b] = alpha[b, a] = v
    alpha, repaired = repair_pd(alpha, what="estimated UN correlation", level=logging.INFO)
    return alpha, repaired


# ---------------------------------------------------------------- core


def _linear_predictors(blocks, beta, offsets):
    return [b.X @ beta + (0.0 if off is None else off) for b, off in zip(blocks, offsets)]


def _block_pieces(family, block, eta, R, phi):
    """mu, residuals, A, D and V^-1 for one block at fixed R and phi."""
    mu = family.inverse_link(eta)
    A = family.variance(mu)
    L = family.link_deriv(mu)
    D = block.X / L[..., None]
    s = np.sqrt(A)
    Rinv = np.linalg.inv(R)
    Vinv = Rinv[None, :, :] / (phi * s[:, :, None] * s[:, None, :])
    return mu, block.y - mu, A, L, D, Vinv


def _score_and_info(family, blocks, etas, Rs, phi):
    # With S = diag(sqrt(A)), V^-1 = S^-1 R^-1 S^-1 / phi, so every block
    # reduces to two stacked matrix products on the whitened D and e.
    p = blocks[0].X.shape[2]
    M = np.zeros((p, p))
    U = np.zeros(p)
    pearson = []
    for b, eta, R in zip(blocks, etas, Rs):
        mu = family.inverse_link(eta)
        s = np.sqrt(family.variance(mu))
        Dw = (b.X / (family.link_deriv(mu) * s)[..., None]).reshape(-1, p)
        r = (b.y - mu) / s
        n = R.shape[0]
        RDw = np.linalg.solve(R, Dw.reshape(-1, n, p).transpose(1, 0, 2).reshape(n, -1))
        RDw = RDw.reshape(n, -1, p).transpose(1, 0, 2).reshape(-1, p)
        M += Dw.T @ RDw
        U += RDw.T @ r.reshape(-1)
        pearson.append(r)
    return _sym(M) / phi, U / phi, pearson


def _pearson_residuals(family, blocks, etas):
    out = []
    for b, eta in zip(blocks, etas):
        mu = family.inverse_link(eta)
        out.append((b.y - mu) / np.sqrt(family.variance(mu)))
    return out


def _realise(kind, alpha, blocks, wave_grid):
    return [build_correlation(kind, alpha, b.waves, wave_grid, cluster=b.index[0]) for b in blocks]


def _moments(kind, blocks, pearson, n_obs, p, wave_grid, options):
    phi_hat = estimate_phi(pearson, n_obs, p, options.phi_mode)
    alpha, repaired = estimate_alpha(
        kind, [(b.waves, r) for b, r in zip(blocks, pearson)], phi_hat, p, wave_grid,
        bound=options.alpha_bound,
    )
    return phi_hat, alpha, repaired


def fit(dataset: LongitudinalDataset, family, working_kind, options: FitOptions | None = None,
        *, start=None, offsets=None) -> GeeFit:
    """Fit a marginal model by Fisher scoring.

    Parameters
    ----------
    dataset : LongitudinalDataset
        The design matrices are used as given (no intercept is added).
    family : str or Family
    working_kind : {"indep", "ar1", "exch", "un"}
    options : FitOptions, optional
    start : array-like, optional
        Starting ``beta``. Defaults to an independence fit started at zero.
    offsets : sequence of arrays, optional
        Per-cluster offsets added to the linear predictor (dataset order).

    Returns
    -------
    GeeFit
        ``converged`` is False when ``max_iter`` was exhausted or the
        iteration diverged; the caches are still evaluated at the last
        finite iterate.
    """
    family = get_family(family)
    kind = normalize_kind(working_kind)
    options = options or FitOptions()
    blocks = dataset.patterns
    grid = dataset.wave_grid
    p, n_obs = dataset.p, dataset.n_obs
    offs = [None] * len(blocks)
    if offsets is not None:
        offs = [np.stack([np.asarray(offsets[i], dtype=float) for i in b.index]) for b in blocks]

    identity = [np.eye(b.waves.shape[0]) for b in blocks]
    iterations = 0
    converged = False
    delta = np.inf

    def scoring_step(beta, Rs, phi):
        M, U, _ = _score_and_info(family, blocks, _linear_predictors(blocks, beta, offs), Rs, phi)
        _check_information(M)
        return np.linalg.solve(M, U)

    if start is None:
        beta = np.zeros(p)
        # Independence initialisation; phi cancels from the step.
        for _ in range(int(options.max_iter)):
            step = scoring_step(beta, identity, 1.0)
            beta = beta + step
            iterations += 1
            delta = float(np.max(np.abs(step)))
            if not np.all(np.isfinite(beta)):
                break
            if delta <= options.tol:
                converged = True
                break
    else:
        beta = np.asarray(start, dtype=float).copy()
        if beta.shape != (p,):
            raise InputError(f"start must have length p={p}")
        converged = kind == "indep"

    alpha, repaired = None, False
    phi = 1.0
    if np.all(np.isfinite(beta)):
        pearson = _pearson_residuals(family, blocks, _linear_predictors(blocks, beta, offs))
        phi, alpha, repaired = _moments(kind, blocks, pearson, n_obs, p, grid, options)

    if kind != "indep" or start is not None:
        converged = False
        budget = int(options.max_iter) if start is not None else max(int(options.max_iter) - iterations, 1)
        for _ in range(budget):
            Rs = _realise(kind, alpha, blocks, grid)
            step = scoring_step(beta, Rs, phi)
            new_beta = beta + step
            iterations += 1
            delta = float(np.max(np.abs(step)))
            if not np.all(np.isfinite(new_beta)) or delta > DIVERGENCE_STEP:
                logger.warning("GEE iteration diverged (%s working structure)", kind)
                break
            beta = new_beta
            logger.debug("iteration %d: max|step|=%.3g beta=%s", iterations, delta, beta)
            pearson = _pearson_residuals(family, blocks, _linear_predictors(blocks, beta, offs))
            phi, alpha, repaired = _moments(kind, blocks, pearson, n_obs, p, grid, options)
            if delta <= options.tol:
                converged = True
                break

    return _finalize(dataset, family, kind, beta, alpha, phi, offs, options,
                     iterations, converged, delta, repaired)


def _finalize(dataset, family, kind, beta, alpha, phi, offs, options,
              iterations, converged, delta, repaired) -> GeeFit:
    blocks = dataset.patterns
    grid = dataset.wave_grid
    p = dataset.p
    Rs = _realise(kind, alpha, blocks, grid)
    etas = _linear_predictors(blocks, beta, offs)
    parts = []
    M = np.zeros((p, p))
    U = np.zeros(p)
    ql = 0.0
    for b, eta, R in zip(blocks, etas, Rs):
        mu, e, A, L, D, Vinv = _block_pieces(family, b, eta, R, phi)
        s = np.sqrt(A)
        V = phi * s[:, :, None] * R[None, :, :] * s[:, None, :]
        DtVinv = np.einsum("gnp,gnm->gpm", D, Vinv)
        M += np.einsum("gpn,gnq->pq", DtVinv, D)
        U += np.einsum("gpn,gn->p", DtVinv, e)
        ql += family.quasi_likelihood(b.y, mu, phi)
        parts.append((b, mu, e, A, L, D, R, V, Vinv, DtVinv))
    M = _sym(M)
    _check_information(M)
    Minv = _sym(np.linalg.inv(M))
    J = np.zeros((p, p))
    caches = []
    where = {}
    for k, (b, mu, e, A, L, D, R, V, Vinv, DtVinv) in enumerate(parts):
        u = np.einsum("gpn,gn->gp", DtVinv, e)
        J += u.T @ u
        H = np.einsum("gnp,pq,gqm->gnm", D, Minv, DtVinv)
        cache = BlockCache(b.index, b.waves, b.positions, b.X, b.y, mu, e, A, L, D, R, V, Vinv, H)
        _freeze(mu, e, A, L, D, V, Vinv, H)
        caches.append(cache)
        for g, i in enumerate(b.index):
            where[int(i)] = (k, g)
    sandwich_cov = _sym(Minv @ J @ Minv)
    if isinstance(alpha, np.ndarray):
        alpha = alpha.copy()
    _freeze(beta, Minv, sandwich_cov, alpha)
    return GeeFit(
        family=family, kind=kind, beta=beta, alpha=alpha, phi=float(phi),
        model_cov=Minv, sandwich_cov=sandwich_cov, blocks=tuple(caches),
        iterations=iterations, converged=converged, ql=float(ql),
        max_delta=float(delta), ee_norm=float(np.linalg.norm(U)),
        n_clusters=dataset.n_clusters, n_obs=dataset.n_obs, wave_grid=grid,
        options=options, alpha_repaired=repaired, _where=where,
    )


# ---------------------------------------------------------------- post-fit


def sandwich(fit: GeeFit, outer=None):
    """Empirical covariance ``M^-1 (sum D'V^-1 S_i V^-1 D) M^-1``.

    ``S_i`` is ``e_i e_i'`` unless ``outer`` supplies one n_i x n_i matrix
    per cluster (dataset order); passing the fitted ``V_i`` recovers
    ``M^-1``.
    """
    M = fit.M()
    _check_information(M)
    Minv = np.linalg.inv(M)
    p = fit.p
    J = np.zeros((p, p))
    for b in fit.blocks:
        DtVinv = np.einsum("gnp,gnm->gpm", b.D, b.Vinv)
        if outer is None:
            u = np.einsum("gpn,gn->gp", DtVinv, b.resid)
            J += u.T @ u
        else:
            S = np.stack([np.asarray(outer[int(i)], dtype=float) for i in b.index])
            J += np.einsum("gpn,gnm,gqm->pq", DtVinv, S, DtVinv)
    return _sym(Minv @ J @ Minv)


def leverage(fit: GeeFit, cluster_index):
    """Cluster leverage ``H_i = D_i M^-1 D_i' V_i^-1``."""
    return fit.cluster(cluster_index).H


def _deletion_solve(H, e, cluster):
    n = H.shape[-1]
    IH = np.eye(n) - H
    if np.linalg.cond(IH) > _COND_LIMIT:
        raise DeletionSingularError(
            f"(I - H) is singular for cluster {cluster}; it dominates the fit", cluster=cluster
        )
    return np.linalg.solve(IH, e)


def corrected_residuals(fit: GeeFit):
    """``(I - H_i)^-1 e_i`` for every cluster, in dataset order."""
    out = [None] * fit.n_clusters
    for b in fit.blocks:
        for g, i in enumerate(b.index):
            out[int(i)] = _deletion_solve(b.H[g], b.resid[g], int(i))
    return out


def one_step_deletion(fit: GeeFit, cluster_index):
    """One-step approximation ``C_i`` of ``beta_hat - beta_hat_(i)``."""
    c = fit.cluster(cluster_index)
    u = _deletion_solve(c.H, c.resid, cluster_index)
    return fit.model_cov @ (c.D.T @ (c.Vinv @ u))


def one_step_deletions(fit: GeeFit):
    """Stack of ``C_i`` for all clusters, shape (N, p)."""
    out = np.empty((fit.n_clusters, fit.p))
    for i, u in enumerate(corrected_residuals(fit)):
        c = fit.cluster(i)
        out[i] = fit.model_cov @ (c.D.T @ (c.Vinv @ u))
    return out


def exact_deletion(dataset, family, working_kind, options, cluster_index, full_fit=None):
    """Refit without cluster ``cluster_index``, warm-started at the full-data beta."""
    if dataset.n_clusters < 2:
        raise InputError("exact deletion needs at least two clusters")
    if not 0 <= cluster_index < dataset.n_clusters:
        raise IndexError(f"cluster index {cluster_index} out of range")
    if full_fit is None:
        full_fit = fit(dataset, family, working_kind, options)
    reduced = dataset.without(cluster_index)
    return fit(reduced, family, working_kind, options, start=full_fit.beta)


def with_options(fit_obj: GeeFit, **changes) -> FitOptions:
    return replace(fit_obj.options, **changes)
