import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from geepress import GEE, WorkingCorrelationSelector, engine
from geepress.simgen import ScenarioSpec, generate_dataset


def to_arrays(data):
    X = np.vstack([c.X[:, 1:] for c in data.clusters])
    y = np.concatenate([c.y for c in data.clusters])
    groups = np.concatenate([[i] * c.n for i, c in enumerate(data.clusters)])
    time = np.concatenate([c.waves for c in data.clusters])
    return X, y, groups, time


@pytest.fixture(scope="module")
def arrays():
    data = generate_dataset(ScenarioSpec("binary", "unbalanced", 60, "ar1", 0.4, seed=3), 0)
    return data, to_arrays(data)


def test_params_and_clone():
    est = GEE(family="poisson", corr="ar1", tol=1e-9)
    assert est.get_params()["corr"] == "ar1"
    twin = clone(est)
    assert twin.get_params() == est.get_params() and twin is not est
    est.set_params(corr="un")
    assert est.corr == "un"


def test_matches_functional_fit(arrays):
    data, (X, y, g, t) = arrays
    est = GEE(family="binary", corr="ar1").fit(X, y, groups=g, time=t)
    ref = engine.fit(data, "binary", "ar1", engine.FitOptions())
    np.testing.assert_allclose(np.r_[est.intercept_, est.coef_], ref.beta, rtol=1e-10)
    np.testing.assert_allclose(est.bse_, ref.bse_robust, rtol=1e-10)
    assert est.alpha_ == pytest.approx(ref.alpha)
    assert est.converged_ and est.n_features_in_ == 2


def test_predict_is_inverse_link(arrays):
    _, (X, y, g, t) = arrays
    est = GEE(corr="exch").fit(X, y, groups=g, time=t)
    eta = est.decision_function(X)
    np.testing.assert_allclose(est.predict(X), 1 / (1 + np.exp(-eta)))
    with pytest.raises(ValueError):
        est.predict(X[:, :1])


def test_without_intercept(arrays):
    data, (X, y, g, t) = arrays
    est = GEE(corr="indep", fit_intercept=False).fit(np.column_stack([np.ones(len(y)), X]), y, g, t)
    ref = engine.fit(data, "binary", "indep", engine.FitOptions())
    assert est.intercept_ == 0.0
    np.testing.assert_allclose(est.coef_, ref.beta, rtol=1e-10)


def test_not_fitted():
    with pytest.raises(NotFittedError):
        GEE().predict(np.zeros((2, 2)))
    with pytest.raises(NotFittedError):
        WorkingCorrelationSelector().predict(np.zeros((2, 2)))


def test_groups_required(arrays):
    _, (X, y, g, t) = arrays
    with pytest.raises(ValueError):
        GEE().fit(X, y)
    with pytest.raises(ValueError):
        GEE().fit(X, y, groups=g[:-1])


def test_selector(arrays):
    data, (X, y, g, t) = arrays
    sel = WorkingCorrelationSelector(criterion="CIC", candidates=("indep", "ar1", "exch")).fit(X, y, g, t)
    assert set(sel.winners_) == {"CIC", "DBAR", "GPC", "QIC", "RJ1", "RJ2", "SC"}
    assert sel.best_corr_ == sel.report_.winners["CIC"]
    assert sel.best_estimator_.corr == sel.best_corr_
    np.testing.assert_allclose(sel.predict(X), sel.best_estimator_.predict(X))
    with pytest.raises(ValueError):
        WorkingCorrelationSelector(criterion="AIC").fit(X, y, g, t)
