"""Wald and robust score tests for linear hypotheses ``C beta = r``."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import linalg, stats

from . import engine
from .exceptions import GeePressError, InputError, RankDeficiencyError


@dataclass(frozen=True, eq=False)
class LinearHypothesis:
    """``C beta = r`` with ``C`` of full row rank q <= p."""

    C: np.ndarray
    r: np.ndarray | None = None

    def __post_init__(self):
        C = np.atleast_2d(np.asarray(self.C, dtype=float))
        q = C.shape[0]
        r = np.zeros(q) if self.r is None else np.asarray(self.r, dtype=float).reshape(-1)
        if r.shape[0] != q:
            raise InputError(f"r has length {r.shape[0]}, C has {q} rows")
        if np.linalg.matrix_rank(C) != q or q > C.shape[1]:
            raise InputError("C must have full row rank q <= p")
        object.__setattr__(self, "C", C)
        object.__setattr__(self, "r", r)

    @property
    def q(self) -> int:
        return self.C.shape[0]

    @classmethod
    def coefficients(cls, indices, p, values=None):
        """Hypothesis that ``beta[indices] == values`` (default zero)."""
        indices = list(indices)
        C = np.zeros((len(indices), p))
        C[np.arange(len(indices)), indices] = 1.0
        return cls(C, values)


@dataclass(frozen=True)
class TestResult:
    statistic: float
    df: int
    p_value: float
    kind: str


def _chi2_result(stat, df, kind):
    stat = max(float(stat), 0.0)
    return TestResult(stat, int(df), float(stats.chi2.sf(stat, df)), kind)


def _solve_psd(S, v, what):
    if not np.all(np.isfinite(S)) or np.linalg.cond(S) > 1e13:
        raise RankDeficiencyError(f"{what} is singular")
    return np.linalg.solve(S, v)


def wald_test(fit, hypothesis: LinearHypothesis, cov=None) -> TestResult:
    """``(C b - r)' (C Sigma C')^-1 (C b - r)`` on the sandwich covariance."""
    if not fit.converged:
        raise GeePressError("Wald test requires a converged fit")
    S = fit.sandwich_cov if cov is None else cov
    C, r = hypothesis.C, hypothesis.r
    if C.shape[1] != fit.p:
        raise InputError(f"C has {C.shape[1]} columns, model has p={fit.p}")
    d = C @ fit.beta - r
    stat = float(d @ _solve_psd(C @ S @ C.T, d, "C Sigma C'"))
    return _chi2_result(stat, hypothesis.q, "wald")


def _null_space_basis(C):
    """Basis K of {b : C b = 0}; plain coordinate columns when C selects coordinates."""
    p = C.shape[1]
    rows = np.abs(C)
    selects = np.all((rows == 0) | (rows == 1), axis=1) & (np.count_nonzero(C, axis=1) == 1)
    if np.all(selects) and np.all(C.sum(axis=1) == 1):
        chosen = set(np.argmax(C, axis=1).tolist())
        keep = [j for j in range(p) if j not in chosen]
        K = np.zeros((p, len(keep)))
        K[keep, np.arange(len(keep))] = 1.0
        return K
    return linalg.null_space(C)


def restricted_fit(dataset, family, working_kind, hypothesis, options=None):
    """Fit under ``C beta = r`` by reparameterising ``beta = b0 + K gamma``.

    Returns ``(beta_tilde, fit_of_gamma)``.
    """
    C, r = hypothesis.C, hypothesis.r
    if C.shape[1] != dataset.p:
        raise InputError(f"C has {C.shape[1]} columns, dataset has p={dataset.p}")
    if hypothesis.q >= dataset.p:
        raise InputError("the restricted model must keep at least one free parameter")
    b0 = np.linalg.lstsq(C, r, rcond=None)[0]
    K = _null_space_basis(C)
    reduced = dataset.with_design([c.X @ K for c in dataset.clusters])
    offsets = [c.X @ b0 for c in dataset.clusters]
    rfit = engine.fit(reduced, family, working_kind, options, offsets=offsets)
    if not rfit.converged:
        raise GeePressError("restricted fit did not converge")
    return b0 + K @ rfit.beta, rfit


def score_test(dataset, family, working_kind, hypothesis: LinearHypothesis, options=None) -> TestResult:
    """Generalised robust score test of ``C beta = r``.

    The model is fitted under the null, giving ``beta~`` together with its
    own moment estimates of ``alpha`` and ``phi``. At that point the
    full-model score contributions ``U_i = D_i' V_i^-1 e_i`` (D from the
    unrestricted design) give ``U = sum U_i``, ``M = sum D_i' V_i^-1 D_i``
    and ``J = sum U_i U_i'``. The statistic is

        T = U' M^-1 C' (C M^-1 J M^-1 C')^-1 C M^-1 U,

    referred to chi-square with q degrees of freedom. It is invariant to
    the parameterisation of the nuisance directions.
    """
    _, rfit = restricted_fit(dataset, family, working_kind, hypothesis, options)
    p = dataset.p
    M = np.zeros((p, p))
    U = np.zeros(p)
    J = np.zeros((p, p))
    for b in rfit.blocks:
        X = np.stack([dataset.clusters[i].X for i in b.index])
        D = X / b.L[..., None]
        DtVinv = np.einsum("gnp,gnm->gpm", D, b.Vinv)
        M += np.einsum("gpn,gnq->pq", DtVinv, D)
        u = np.einsum("gpn,gn->gp", DtVinv, b.resid)
        U += u.sum(axis=0)
        J += u.T @ u
    M = (M + M.T) / 2.0
    engine._check_information(M)
    Minv = np.linalg.inv(M)
    C = hypothesis.C
    w = C @ Minv @ U
    S = C @ Minv @ J @ Minv @ C.T
    stat = float(w @ _solve_psd(S, w, "score covariance"))
    return _chi2_result(stat, hypothesis.q, "score")
