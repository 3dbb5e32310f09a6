import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

from geepress import engine  # noqa: E402
from geepress.criteria import cic, qic, rj  # noqa: E402
from geepress.data import Cluster, LongitudinalDataset  # noqa: E402
from geepress.simgen import ScenarioSpec, generate_dataset  # noqa: E402
from oracles import rj_from_eigenvalues  # noqa: E402

settings.register_profile("default", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.function_scoped_fixture])
settings.load_profile("default")

ACCEPTANCE_LINES = []
IDENTITY_LOG = {"checked": 0, "violations": []}


def identity_violations(fit):
    """Algebraic identities every converged fit must satisfy."""
    out = []
    c = cic(fit)
    q = qic(fit)
    if abs(q - (-2.0 * fit.ql + 2.0 * c)) > 1e-8 * max(1.0, abs(q)):
        out.append("QIC != -2QL + 2CIC")
    rj1, rj2, dbar = rj(fit)
    if abs(dbar - (rj2 - 2 * rj1 + 1)) > 1e-10:
        out.append("DBAR != RJ2 - 2RJ1 + 1")
    ref = rj_from_eigenvalues(fit.M() @ fit.sandwich_cov)
    if not np.allclose((rj1, rj2, dbar), ref, rtol=1e-8, atol=1e-10):
        out.append("RJ values disagree with the eigenvalue computation")
    V = [fit.cluster(i).V for i in range(fit.n_clusters)]
    S = engine.sandwich(fit, outer=V)
    if np.max(np.abs(S - fit.model_cov)) > 1e-8 * np.max(np.abs(fit.model_cov)):
        out.append("sandwich(V) != M^-1")
    tr = sum(np.trace(engine.leverage(fit, i)) for i in range(fit.n_clusters))
    if abs(tr - fit.p) > 1e-8:
        out.append(f"sum trace(H) = {tr} != p")
    return out


@pytest.fixture(autouse=True)
def _check_every_fit(request, monkeypatch):
    """Run the identity checks on every converged fit made by a fast test."""
    if request.node.get_closest_marker("slow") or request.node.get_closest_marker("acceptance"):
        yield
        return
    original = engine.fit

    def checked(*args, **kwargs):
        result = original(*args, **kwargs)
        if result.converged:
            IDENTITY_LOG["checked"] += 1
            bad = identity_violations(result)
            if bad:
                IDENTITY_LOG["violations"].append((request.node.nodeid, bad))
            assert not bad, bad
        return result

    monkeypatch.setattr(engine, "fit", checked)
    yield


def pytest_terminal_summary(terminalreporter):
    if IDENTITY_LOG["checked"]:
        terminalreporter.write_line(
            f"identity checks: {IDENTITY_LOG['checked']} fits, {len(IDENTITY_LOG['violations'])} violations")
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def make_dataset(y_list, X_list, waves_list=None, family=None):
    clusters = []
    for i, (y, X) in enumerate(zip(y_list, X_list)):
        waves = np.arange(1, len(y) + 1) if waves_list is None else waves_list[i]
        clusters.append(Cluster(i + 1, np.asarray(y, float), np.asarray(X, float), np.asarray(waves, float)))
    return LongitudinalDataset(tuple(clusters), family=family)


@pytest.fixture(scope="session")
def binary_data():
    return generate_dataset(ScenarioSpec("binary", "balanced", 60, "exch", 0.3, seed=11), 0)


@pytest.fixture(scope="session")
def binary_unbalanced():
    return generate_dataset(ScenarioSpec("binary", "unbalanced", 80, "ar1", 0.4, seed=12), 0)


@pytest.fixture(scope="session")
def poisson_data():
    return generate_dataset(ScenarioSpec("poisson", "balanced", 50, "ar1", 0.4, seed=13), 0)


@pytest.fixture(scope="session")
def poisson_unbalanced():
    return generate_dataset(ScenarioSpec("poisson", "unbalanced", 70, "un", 0.4, seed=14), 0)


def gaussian_clusters(N, sizes, p=3, seed=0, rho=0.4):
    rng = np.random.default_rng(seed)
    Xs, ys = [], []
    for i in range(N):
        n = sizes if np.isscalar(sizes) else sizes[i]
        X = np.column_stack([np.ones(n), rng.normal(size=(n, p - 1))])
        shared = rng.normal() * np.sqrt(rho)
        y = X @ np.linspace(1.0, -0.5, p) + shared + rng.normal(size=n) * np.sqrt(1 - rho)
        Xs.append(X)
        ys.append(y)
    return Xs, ys
