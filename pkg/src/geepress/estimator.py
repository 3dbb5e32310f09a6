"""scikit-learn style wrappers around the functional GEE core."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, RegressorMixin
from sklearn.utils.validation import check_array, check_is_fitted, check_X_y

from . import engine
from .correlation import KINDS, label, normalize_kind
from .criteria import CRITERIA, select
from .data import LongitudinalDataset
from .families import get_family


def _dataset(X, y, groups, time, family):
    X, y = check_X_y(X, y, y_numeric=True)
    if groups is None:
        raise ValueError("groups (cluster ids, one per row) are required")
    groups = np.asarray(groups).reshape(-1)
    if groups.shape[0] != X.shape[0]:
        raise ValueError("groups must have one entry per row of X")
    return LongitudinalDataset.from_long(y, X, groups, time, family=family)


def _design(X, fit_intercept):
    X = np.asarray(X, dtype=float)
    if fit_intercept:
        X = np.column_stack([np.ones(X.shape[0]), X])
    return X


class GEE(RegressorMixin, BaseEstimator):
    """Marginal regression for clustered responses fitted by GEE.

    Rows of one cluster must be contiguous and ordered by ``time``.

    Parameters
    ----------
    family : {"binary", "poisson", "gaussian"}
    corr : {"indep", "ar1", "exch", "un"}
    phi : {"estimate", "fixed-one"}
    max_iter, tol : Fisher-scoring controls.
    fit_intercept : prepend a column of ones to X.

    Attributes
    ----------
    coef_, intercept_ : fitted coefficients (``intercept_`` is 0.0 without an intercept).
    alpha_, phi_ : working-correlation and dispersion estimates.
    bse_, bse_model_ : robust (sandwich) and model-based standard errors,
        in the order ``[intercept, coef...]``.
    fit_ : the underlying ``GeeFit``.
    """

    def __init__(self, family="binary", corr="exch", phi="estimate", max_iter=200, tol=1e-8,
                 fit_intercept=True):
        self.family = family
        self.corr = corr
        self.phi = phi
        self.max_iter = max_iter
        self.tol = tol
        self.fit_intercept = fit_intercept

    def _options(self):
        return engine.FitOptions(max_iter=self.max_iter, tol=self.tol, phi_mode=self.phi)

    def fit(self, X, y, groups=None, time=None):
        X = check_array(X)
        data = _dataset(_design(X, self.fit_intercept), y, groups, time, get_family(self.family).kind)
        result = engine.fit(data, self.family, normalize_kind(self.corr), self._options())
        self.fit_ = result
        self.n_features_in_ = X.shape[1]
        beta = result.beta
        self.intercept_ = float(beta[0]) if self.fit_intercept else 0.0
        self.coef_ = beta[1:].copy() if self.fit_intercept else beta.copy()
        self.alpha_ = result.alpha
        self.phi_ = result.phi
        self.bse_ = result.bse_robust
        self.bse_model_ = result.bse_model
        self.converged_ = result.converged
        self.n_iter_ = result.iterations
        return self

    def decision_function(self, X):
        """Linear predictor ``X beta``."""
        check_is_fitted(self, "coef_")
        X = check_array(X)
        if X.shape[1] != self.n_features_in_:
            raise ValueError(f"X has {X.shape[1]} features, expected {self.n_features_in_}")
        return X @ self.coef_ + self.intercept_

    def predict(self, X):
        """Marginal mean ``g^-1(X beta)``."""
        return get_family(self.family).inverse_link(self.decision_function(X))


class WorkingCorrelationSelector(BaseEstimator):
    """Fit every candidate working structure and rank them by a criterion.

    After ``fit``, ``best_corr_`` is the winner under ``criterion``,
    ``report_`` holds all criterion values and ``best_estimator_`` is a
    ``GEE`` refitted with the winning structure.
    """

    def __init__(self, family="binary", candidates=KINDS, criterion="GPC", criteria=CRITERIA,
                 phi="estimate", max_iter=200, tol=1e-8, fit_intercept=True):
        self.family = family
        self.candidates = candidates
        self.criterion = criterion
        self.criteria = criteria
        self.phi = phi
        self.max_iter = max_iter
        self.tol = tol
        self.fit_intercept = fit_intercept

    def fit(self, X, y, groups=None, time=None):
        if self.criterion not in self.criteria:
            raise ValueError(f"criterion {self.criterion!r} is not among {tuple(self.criteria)}")
        X = check_array(X)
        data = _dataset(_design(X, self.fit_intercept), y, groups, time, get_family(self.family).kind)
        options = engine.FitOptions(max_iter=self.max_iter, tol=self.tol, phi_mode=self.phi)
        self.report_ = select(data, self.family, self.candidates, options, tuple(self.criteria))
        self.winners_ = {c: label(k) for c, k in self.report_.winners.items() if k is not None}
        self.best_corr_ = self.report_.winners[self.criterion]
        self.best_estimator_ = GEE(self.family, self.best_corr_, self.phi, self.max_iter, self.tol,
                                   self.fit_intercept).fit(X, y, groups, time)
        self.n_features_in_ = X.shape[1]
        return self

    def predict(self, X):
        check_is_fitted(self, "best_estimator_")
        return self.best_estimator_.predict(X)
