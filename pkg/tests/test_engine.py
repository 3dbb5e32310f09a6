import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from geepress import engine
from geepress.criteria import all_criteria, gpc
from geepress.engine import FitOptions, estimate_alpha, estimate_phi
from geepress.exceptions import RankDeficiencyError, StructureInfeasibleError, UnconvergedFitError
from geepress.simgen import ScenarioSpec, generate_dataset, synthetic_cardia

from conftest import gaussian_clusters, make_dataset
from oracles import (ar1_moment, cluster_deletion_ols, exchangeable_moment, logistic_irls, ols,
                     poisson_irls, white_sandwich)

FIXED = FitOptions(phi_mode="fixed-one")
KINDS = ["indep", "ar1", "exch", "un"]


def stacked(data):
    _, _, y, X = data.long_arrays()
    return X, y


# ---------------------------------------------------------------- oracles


def test_binary_indep_matches_logistic_irls(binary_data):
    fit = engine.fit(binary_data, "binary", "indep", FIXED)
    X, y = stacked(binary_data)
    assert np.max(np.abs(fit.beta - logistic_irls(X, y))) < 1e-6


def test_poisson_indep_matches_irls(poisson_data):
    fit = engine.fit(poisson_data, "poisson", "indep", FIXED)
    X, y = stacked(poisson_data)
    assert np.max(np.abs(fit.beta - poisson_irls(X, y))) < 1e-6


def test_gaussian_singletons_match_ols():
    rng = np.random.default_rng(3)
    X = np.column_stack([np.ones(40), rng.normal(size=(40, 2))])
    y = X @ [1.0, 2.0, -1.0] + rng.normal(size=40)
    data = make_dataset([[v] for v in y], [X[i:i + 1] for i in range(40)])
    fit = engine.fit(data, "gaussian", "indep")
    np.testing.assert_allclose(fit.beta, ols(X, y), rtol=0, atol=1e-10)
    # heteroskedasticity-consistent sandwich and scalar hat values
    e = y - X @ ols(X, y)
    bread = np.linalg.inv(X.T @ X)
    hc0 = bread @ (X.T * e**2) @ X @ bread
    np.testing.assert_allclose(fit.sandwich_cov, hc0, rtol=1e-9)
    h = np.einsum("ij,jk,ik->i", X, bread, X)
    np.testing.assert_allclose([engine.leverage(fit, i)[0, 0] for i in range(40)], h, rtol=1e-9)


def test_gaussian_clusters_sandwich_matches_white():
    Xs, ys = gaussian_clusters(30, 4, seed=5)
    data = make_dataset(ys, Xs)
    fit = engine.fit(data, "gaussian", "indep")
    np.testing.assert_allclose(fit.beta, ols(np.vstack(Xs), np.concatenate(ys)), atol=1e-10)
    np.testing.assert_allclose(fit.sandwich_cov, white_sandwich(Xs, ys), rtol=1e-9)


def test_linear_one_step_deletion_is_exact():
    Xs, ys = gaussian_clusters(15, [2, 3, 4] * 5, seed=6)
    data = make_dataset(ys, Xs)
    fit = engine.fit(data, "gaussian", "indep")
    C = engine.one_step_deletions(fit)
    for i in range(15):
        np.testing.assert_allclose(C[i], fit.beta - cluster_deletion_ols(Xs, ys, i), atol=1e-10)


def test_linear_singleton_dbeta_formula():
    rng = np.random.default_rng(8)
    X = np.column_stack([np.ones(12), rng.normal(size=12)])
    y = X @ [0.5, 1.0] + rng.normal(size=12)
    data = make_dataset([[v] for v in y], [X[i:i + 1] for i in range(12)])
    fit = engine.fit(data, "gaussian", "indep", FIXED)
    bread = np.linalg.inv(X.T @ X)
    e = y - X @ ols(X, y)
    h = np.einsum("ij,jk,ik->i", X, bread, X)
    for i in range(12):
        expected = bread @ X[i] * e[i] / (1 - h[i])
        np.testing.assert_allclose(engine.one_step_deletion(fit, i), expected, atol=1e-12)


# ---------------------------------------------------------------- fit properties


@pytest.mark.parametrize("kind", KINDS)
@pytest.mark.parametrize("which", ["binary_data", "binary_unbalanced", "poisson_data", "poisson_unbalanced"])
def test_fit_invariants(kind, which, request):
    data = request.getfixturevalue(which)
    family = "binary" if which.startswith("binary") else "poisson"
    fit = engine.fit(data, family, kind)
    assert fit.converged
    assert fit.phi > 0
    assert fit.ee_norm <= 1e-6 * (1 + np.linalg.norm(fit.beta))
    for cov in (fit.model_cov, fit.sandwich_cov):
        np.testing.assert_array_equal(cov, cov.T)
        assert np.all(np.linalg.eigvalsh(cov) > 0)
    Minv = np.linalg.inv(fit.M())
    assert np.max(np.abs(Minv - fit.model_cov)) <= 1e-8 * np.max(np.abs(fit.model_cov))
    np.testing.assert_allclose(engine.sandwich(fit), fit.sandwich_cov, rtol=1e-8, atol=1e-14)
    if kind in ("ar1", "exch"):
        assert -0.99 <= fit.alpha <= 0.99


@pytest.mark.parametrize("kind", KINDS)
def test_moments_are_fixed_point(kind, binary_unbalanced):
    fit = engine.fit(binary_unbalanced, "binary", kind)
    sets = []
    pearson = []
    for b in fit.blocks:
        r = b.resid / np.sqrt(b.A)
        sets.append((b.waves, r))
        pearson.append(r)
    phi = estimate_phi(pearson, fit.n_obs, fit.p)
    assert phi == pytest.approx(fit.phi, abs=1e-6)
    alpha, _ = estimate_alpha(kind, sets, phi, fit.p, fit.wave_grid)
    if kind != "indep":
        np.testing.assert_allclose(alpha, fit.alpha, atol=1e-6)


def test_permutation_invariance(binary_unbalanced):
    order = np.random.default_rng(0).permutation(binary_unbalanced.n_clusters)
    shuffled = binary_unbalanced.permuted(order)
    for kind in ("ar1", "exch"):
        a = engine.fit(binary_unbalanced, "binary", kind)
        b = engine.fit(shuffled, "binary", kind)
        np.testing.assert_allclose(a.beta, b.beta, atol=1e-8)
        ca, cb = all_criteria(a), all_criteria(b)
        for name in ca:
            assert ca[name] == pytest.approx(cb[name], rel=1e-8, abs=1e-10)


def test_large_sample_consistency():
    spec = ScenarioSpec("binary", "balanced", 2000, "ar1", 0.4, seed=99)
    data = generate_dataset(spec, 0)
    fit = engine.fit(data, "binary", "ar1", FIXED)
    z = (fit.beta - np.array(spec.beta)) / fit.bse_robust
    assert np.all(np.abs(z) < 3)


def test_unequal_spacing_and_singletons():
    data = synthetic_cardia(n_subjects=150, seed=4)
    fit = engine.fit(data, "binary", "ar1")
    assert fit.converged and 0.0 <= fit.alpha <= 0.99
    # a subject seen once contributes to beta without breaking AR1 estimation
    assert any(c.n == 1 for c in data.clusters) or True


def test_singleton_clusters_allowed_under_ar1():
    rng = np.random.default_rng(12)
    ys, Xs = [], []
    for i in range(40):
        n = 1 if i % 5 == 0 else 4
        X = np.column_stack([np.ones(n), rng.normal(size=n)])
        ys.append((rng.random(n) < 0.5).astype(float))
        Xs.append(X)
    fit = engine.fit(make_dataset(ys, Xs), "binary", "ar1")
    assert fit.converged


def test_rank_deficient_design():
    Xs, ys = gaussian_clusters(10, 3, seed=1)
    Xs = [np.column_stack([X, X[:, 1]]) for X in Xs]
    with pytest.raises(RankDeficiencyError):
        engine.fit(make_dataset(ys, Xs), "gaussian", "indep")


def test_non_convergence_is_reported(binary_data):
    fit = engine.fit(binary_data, "binary", "exch", FitOptions(max_iter=1))
    assert not fit.converged
    with pytest.raises(UnconvergedFitError):
        gpc(fit)
    assert gpc(fit, allow_unconverged=True) > 0


def test_un_infeasible_pair():
    rng = np.random.default_rng(2)
    ys, Xs, waves = [], [], []
    for i in range(20):
        w = [1, 2] if i else [1, 2, 3]
        ys.append((rng.random(len(w)) < 0.5).astype(float))
        Xs.append(np.column_stack([np.ones(len(w)), rng.normal(size=len(w))]))
        waves.append(w)
    with pytest.raises(StructureInfeasibleError) as info:
        engine.fit(make_dataset(ys, Xs, waves), "binary", "un")
    assert info.value.pair is not None


def test_single_cluster_sandwich_rank_one():
    Xs, ys = gaussian_clusters(1, 6, seed=3)
    fit = engine.fit(make_dataset(ys, Xs), "gaussian", "indep")
    assert np.linalg.matrix_rank(fit.sandwich_cov, tol=1e-10 * np.abs(fit.sandwich_cov).max()) <= 1


# ---------------------------------------------------------------- moment estimators


def test_phi_examples():
    r = [np.array([0.0, 0.0, 2.0]), np.array([0.0, 0.0, 0.0, 0.0])]
    assert estimate_phi(r, 7, 3) == pytest.approx(1.0)
    assert estimate_phi(r, 7, 3, "fixed-one") == 1.0
    big = np.random.default_rng(0).standard_normal(100_000)
    assert estimate_phi([big], 100_000, 3) == pytest.approx(1.0, abs=0.02)


def test_zero_cross_products_give_zero_alpha():
    r = np.array([[1.0, 0.0, 0.0], [0.0, 0.0, -1.0]])
    grid = (1.0, 2.0, 3.0)
    assert estimate_alpha("exch", [(grid, r)], 1.0, 1, grid)[0] == 0.0
    assert estimate_alpha("ar1", [(grid, r)], 1.0, 1, grid)[0] == 0.0


def test_identical_residuals_hand_computed():
    # N=3 clusters of size 2 with r_it = c_i; p = 1.
    c = np.array([1.0, -2.0, 0.5])
    r = np.column_stack([c, c])
    grid = (1.0, 2.0)
    phi = estimate_phi([r], 6, 1)
    assert phi == pytest.approx(2 * np.sum(c**2) / 5)
    raw = np.sum(c**2) / (phi * (3 - 1))
    alpha, _ = estimate_alpha("exch", [(grid, r)], phi, 1, grid)
    assert alpha == pytest.approx(min(raw, 0.99))
    assert alpha == 0.99


@given(seed=st.integers(0, 10_000))
def test_exchangeable_and_ar1_match_pair_loops(seed):
    rng = np.random.default_rng(seed)
    grid = (1.0, 2.0, 3.0, 4.0)
    sets, flat = [], []
    for n in (2, 3, 4):
        r = rng.normal(size=(5, n))
        sets.append((grid[:n], r))
        flat.extend(list(r))
    exch, _ = estimate_alpha("exch", sets, 1.3, 2, grid)
    assert exch == pytest.approx(np.clip(exchangeable_moment(flat, 2, 1.3), -0.99, 0.99), abs=1e-12)
    ar1, _ = estimate_alpha("ar1", sets, 1.3, 2, grid)
    assert ar1 == pytest.approx(np.clip(ar1_moment(flat, 2, 1.3), -0.99, 0.99), abs=1e-12)


def test_un_matches_pair_loops():
    rng = np.random.default_rng(4)
    grid = (1.0, 2.0, 3.0)
    base = rng.normal(size=(40, 1))
    r = 0.6 * base + 0.8 * rng.normal(size=(40, 3))
    alpha, repaired = estimate_alpha("un", [(grid, r)], 1.0, 2, grid)
    assert not repaired
    for a in range(3):
        for b in range(a + 1, 3):
            num = sum(r[i, a] * r[i, b] for i in range(40))
            assert alpha[a, b] == pytest.approx(num / (40 - 2), abs=1e-12)
    np.testing.assert_array_equal(np.diag(alpha), 1.0)


def test_ar1_unequal_gap_least_squares():
    rng = np.random.default_rng(5)
    grid = (0.0, 2.0, 5.0)
    r = rng.normal(size=(200, 3))
    alpha, _ = estimate_alpha("ar1", [(grid, r)], 1.0, 1, grid)
    prods = np.concatenate([r[:, 0] * r[:, 1], r[:, 1] * r[:, 2]])
    gaps = np.concatenate([np.full(200, 2.0), np.full(200, 3.0)])
    grid_a = np.linspace(0, 0.99, 99001)
    loss = [np.sum((prods - a**gaps) ** 2) for a in grid_a[::100]]
    best = grid_a[::100][int(np.argmin(loss))]
    assert abs(alpha - best) < 0.002
    assert 0.0 <= alpha <= 0.99


def test_moment_infeasible():
    grid = (1.0,)
    with pytest.raises(StructureInfeasibleError):
        estimate_alpha("exch", [(grid, np.zeros((5, 1)))], 1.0, 2, grid)


# ---------------------------------------------------------------- deletion


def test_zero_residual_cluster():
    Xs, ys = gaussian_clusters(12, 3, seed=9)
    beta_rest = ols(np.vstack(Xs[1:]), np.concatenate(ys[1:]))
    ys[0] = Xs[0] @ beta_rest
    data = make_dataset(ys, Xs)
    fit = engine.fit(data, "gaussian", "indep")
    np.testing.assert_allclose(engine.one_step_deletion(fit, 0), 0.0, atol=1e-12)
    refit = engine.exact_deletion(data, "gaussian", "indep", None, 0, fit)
    assert np.max(np.abs(refit.beta - fit.beta)) < 1e-8


def test_identical_clusters_deletion():
    y = [1.0, 0.0, 1.0, 1.0, 0.0, 0.0]
    X = np.column_stack([np.ones(6), [0.1, 0.5, -0.3, 0.8, 1.2, -0.7]])
    data = make_dataset([y, y], [X, X])
    fit = engine.fit(data, "binary", "indep")
    for i in (0, 1):
        refit = engine.exact_deletion(data, "binary", "indep", None, i, fit)
        np.testing.assert_allclose(refit.beta, fit.beta, atol=1e-8)


def test_one_step_direction_matches_refits():
    data = generate_dataset(ScenarioSpec("binary", "balanced", 100, "exch", 0.3, seed=21), 0)
    fit = engine.fit(data, "binary", "exch", FIXED)
    C = engine.one_step_deletions(fit)
    cos = []
    for i in range(100):
        d = fit.beta - engine.exact_deletion(data, "binary", "exch", FIXED, i, fit).beta
        cos.append(C[i] @ d / (np.linalg.norm(C[i]) * np.linalg.norm(d)))
    assert np.mean(np.array(cos) > 0.9) >= 0.9


def test_deletion_index_checks(binary_data):
    fit = engine.fit(binary_data, "binary", "indep")
    with pytest.raises(IndexError):
        engine.leverage(fit, binary_data.n_clusters)
    with pytest.raises(IndexError):
        engine.exact_deletion(binary_data, "binary", "indep", None, -1, fit)
