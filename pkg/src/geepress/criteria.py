"""Working-correlation selection criteria and candidate ranking.

Seven criteria are computed from a fitted model, all evaluated at that
model's own ``beta``, ``alpha`` and ``phi``:

========  ==============================================  ==============
name      value                                           ranked by
========  ==============================================  ==============
QIC       ``-2 QL + 2 tr(M_I Sigma)``                     value
CIC       ``tr(M_I Sigma)``                               value
RJ1       ``tr(Q) / p`` with ``Q = M Sigma``              ``|RJ1 - 1|``
RJ2       ``tr(Q^2) / p``                                 ``|RJ2 - 1|``
DBAR      ``RJ2 - 2 RJ1 + 1``                             ``|DBAR|``
SC        ``sum e_i' V_i^-1 e_i``                         value
GPC       ``sum e_i' (I-H_i')^-1 V_i^-1 (I-H_i)^-1 e_i``  value
========  ==============================================  ==============

``M_I = sum D_i' A_i^-1 D_i`` is the independence-model information and
``Sigma`` the sandwich covariance. Ties go to the structure with fewer
correlation parameters (Indep < AR1 < Exch < UN).
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

import numpy as np

from . import engine
from .correlation import SIMPLICITY, label, normalize_kind
from .exceptions import GeePressError, SelectionFailedError, UnconvergedFitError

logger = logging.getLogger(__name__)

CRITERIA = ("CIC", "DBAR", "GPC", "QIC", "RJ1", "RJ2", "SC")


def _require(fit, allow_unconverged):
    if not fit.converged and not allow_unconverged:
        raise UnconvergedFitError(
            f"{label(fit.kind)} fit did not converge; pass allow_unconverged=True to override"
        )


def independence_information(fit):
    """``M_I = sum D_i' A_i^-1 D_i`` at the fitted mean."""
    return sum(np.einsum("gnp,gn,gnq->pq", b.D, 1.0 / b.A, b.D) for b in fit.blocks)


def cic(fit, allow_unconverged=False, sandwich_cov=None) -> float:
    _require(fit, allow_unconverged)
    S = fit.sandwich_cov if sandwich_cov is None else sandwich_cov
    return float(np.trace(independence_information(fit) @ S))


def qic(fit, allow_unconverged=False) -> float:
    return -2.0 * fit.ql + 2.0 * cic(fit, allow_unconverged)


def rj(fit, allow_unconverged=False, sandwich_cov=None):
    """(RJ1, RJ2, DBAR)."""
    _require(fit, allow_unconverged)
    S = fit.sandwich_cov if sandwich_cov is None else sandwich_cov
    Q = fit.M() @ S
    p = fit.p
    rj1 = float(np.trace(Q)) / p
    rj2 = float(np.trace(Q @ Q)) / p
    return rj1, rj2, rj2 - 2.0 * rj1 + 1.0


def sc_contributions(fit):
    out = np.empty(fit.n_clusters)
    for b in fit.blocks:
        out[b.index] = np.einsum("gn,gnm,gm->g", b.resid, b.Vinv, b.resid)
    return out


def sc(fit, allow_unconverged=False) -> float:
    _require(fit, allow_unconverged)
    return float(np.sum(sc_contributions(fit)))


def gpc_contributions(fit):
    """Per-cluster terms ``u_i' V_i^-1 u_i`` with ``u_i = (I - H_i)^-1 e_i``."""
    out = np.empty(fit.n_clusters)
    for i, u in enumerate(engine.corrected_residuals(fit)):
        c = fit.cluster(i)
        out[i] = float(u @ c.Vinv @ u)
    return out


def gpc(fit, allow_unconverged=False) -> float:
    _require(fit, allow_unconverged)
    return float(np.sum(gpc_contributions(fit)))


def all_criteria(fit, allow_unconverged=False) -> dict:
    """All seven criteria for one fit."""
    _require(fit, allow_unconverged)
    c = cic(fit, True)
    rj1, rj2, dbar = rj(fit, True)
    return {
        "CIC": c,
        "DBAR": dbar,
        "GPC": gpc(fit, True),
        "QIC": -2.0 * fit.ql + 2.0 * c,
        "RJ1": rj1,
        "RJ2": rj2,
        "SC": sc(fit, True),
    }


def selection_score(criterion, value) -> float:
    """The quantity minimised when ranking on ``criterion``."""
    if criterion in ("RJ1", "RJ2"):
        return abs(value - 1.0)
    if criterion == "DBAR":
        return abs(value)
    return value


def rank(values: dict, criteria=CRITERIA) -> dict:
    """Winner per criterion from ``{kind: {criterion: value}}``."""
    winners = {}
    for crit in criteria:
        scored = []
        for kind, vals in values.items():
            v = vals.get(crit)
            if v is None or not math.isfinite(v):
                continue
            scored.append((selection_score(crit, v), SIMPLICITY[normalize_kind(kind)], normalize_kind(kind)))
        winners[crit] = min(scored)[2] if scored else None
    return winners


@dataclass
class CriteriaReport:
    """Criterion values per candidate structure and the winner per criterion."""

    values: dict
    winners: dict
    converged: dict
    errors: dict = field(default_factory=dict)
    fits: dict = field(default_factory=dict, repr=False)

    @property
    def candidates(self):
        return list(self.converged)

    def table(self, criteria=CRITERIA):
        """Rows ``(criterion, {kind: value})`` in display order."""
        return [(c, {k: self.values.get(k, {}).get(c) for k in self.candidates}) for c in criteria]


def select(dataset, family, candidates=("indep", "ar1", "exch", "un"), options=None,
           criteria=CRITERIA, allow_unconverged=False, keep_fits=False) -> CriteriaReport:
    """Fit every candidate structure and rank them on each criterion.

    Candidates that fail to converge (or cannot be fitted) are flagged in
    ``converged``/``errors`` and left out of the ranking.
    """
    kinds = [normalize_kind(k) for k in candidates]
    if not kinds:
        raise ValueError("at least one candidate structure is required")
    kinds = list(dict.fromkeys(kinds))
    values, converged, errors, fits = {}, {}, {}, {}
    for kind in kinds:
        try:
            f = engine.fit(dataset, family, kind, options)
        except GeePressError as exc:
            converged[kind] = False
            errors[kind] = str(exc)
            logger.info("candidate %s failed: %s", label(kind), exc)
            continue
        converged[kind] = f.converged
        if keep_fits:
            fits[kind] = f
        if not f.converged and not allow_unconverged:
            errors[kind] = f"did not converge in {f.iterations} iterations"
            continue
        try:
            vals = all_criteria(f, allow_unconverged=True)
        except GeePressError as exc:
            errors[kind] = str(exc)
            converged[kind] = False
            continue
        values[kind] = {c: vals[c] for c in criteria}
    if not values:
        raise SelectionFailedError("no candidate working structure produced criteria: " + "; ".join(
            f"{label(k)}: {m}" for k, m in errors.items()))
    return CriteriaReport(values, rank(values, criteria), converged, errors, fits)
