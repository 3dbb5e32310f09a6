import logging

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from geepress.correlation import (WorkingCorrelation, build_correlation, is_positive_definite, label,
                                  normalize_kind, repair_pd)
from geepress.exceptions import NotPositiveDefiniteError, ParameterError
from geepress.families import ETA_CLAMP, get_family, mean_response

from oracles import finite_difference_jacobian

FAMILIES = ["binary", "poisson", "gaussian"]


# ---------------------------------------------------------------- families


def test_binary_at_zero_predictor():
    mu, D, A, L = mean_response("binary", np.array([[1.0, 0.0]]), np.zeros(2))
    assert mu[0] == pytest.approx(0.5)
    assert A[0] == pytest.approx(0.25)
    assert L[0] == pytest.approx(4.0)


def test_poisson_at_zero_predictor():
    mu, D, A, L = mean_response("poisson", np.array([[1.0, 2.0]]), np.zeros(2))
    assert mu[0] == pytest.approx(1.0)
    assert A[0] == pytest.approx(1.0)


@pytest.mark.parametrize("family", FAMILIES)
def test_derivative_matches_finite_differences(family):
    rng = np.random.default_rng(1)
    X = rng.normal(size=(3, 2))
    beta = rng.normal(size=2) * 0.5
    fam = get_family(family)
    mu, D, A, L = mean_response(family, X, beta)
    fd = finite_difference_jacobian(lambda b: fam.inverse_link(X @ b), beta)
    np.testing.assert_allclose(D, fd, atol=1e-6)
    np.testing.assert_allclose(D, X / L[:, None], rtol=1e-10)


@pytest.mark.parametrize("family", FAMILIES)
@given(eta=st.floats(-200, 200))
def test_variance_positive_after_clamp(family, eta):
    fam = get_family(family)
    assert fam.variance(fam.inverse_link(np.array([eta])))[0] > 0


@pytest.mark.parametrize("family,lo,hi", [("binary", 1e-6, 1 - 1e-6), ("poisson", 1e-6, 1e6),
                                          ("gaussian", -1e6, 1e6)])
@given(u=st.floats(0, 1))
def test_link_round_trip(family, lo, hi, u):
    fam = get_family(family)
    mu = lo + (hi - lo) * u
    if family == "poisson":
        mu = lo * (hi / lo) ** u
    back = fam.inverse_link(fam.link(np.array([mu])))[0]
    assert back == pytest.approx(mu, rel=1e-12, abs=1e-12)


def test_linear_predictor_is_clamped():
    fam = get_family("poisson")
    assert fam.inverse_link(np.array([1e4]))[0] == pytest.approx(np.exp(ETA_CLAMP))
    assert np.isfinite(fam.quasi_likelihood(np.array([1.0]), fam.inverse_link(np.array([-1e4]))))


def test_quasi_likelihood_values():
    assert get_family("binary").quasi_likelihood([1.0], [0.5]) == pytest.approx(-0.693147, abs=1e-6)
    assert get_family("poisson").quasi_likelihood([0.0], [1.0]) == pytest.approx(-1.0)
    assert get_family("binary").quasi_likelihood([1.0], [0.5], phi=2.0) == pytest.approx(-1.386294, abs=1e-6)


@pytest.mark.parametrize("family", ["binary", "poisson"])
def test_quasi_likelihood_is_additive(family):
    rng = np.random.default_rng(2)
    mu = rng.uniform(0.1, 0.9, size=20)
    y = (rng.random(20) < mu).astype(float)
    fam = get_family(family)
    total = fam.quasi_likelihood(y, mu)
    parts = sum(fam.quasi_likelihood(y[i:i + 1], mu[i:i + 1]) for i in range(20))
    assert total == pytest.approx(parts, abs=1e-12)


def test_unknown_family():
    with pytest.raises(ValueError):
        get_family("gamma")


# ---------------------------------------------------------------- correlation


def test_exchangeable_matrix():
    R = build_correlation("exch", 0.2, [1, 2, 3])
    np.testing.assert_array_equal(R, [[1, 0.2, 0.2], [0.2, 1, 0.2], [0.2, 0.2, 1]])


def test_ar1_uses_time_gap():
    R = build_correlation("ar1", 0.5, [1, 3])
    assert R[0, 1] == 0.25


def test_ar1_unequal_gaps():
    R = build_correlation("ar1", 0.9, [0, 2, 5, 7])
    assert R[0, 2] == pytest.approx(0.9**5)
    assert R[1, 3] == pytest.approx(0.9**5)


@given(n=st.integers(1, 6), alpha=st.floats(-0.95, 0.95))
def test_ar1_entries_are_powers_of_alpha(n, alpha):
    R = build_correlation("ar1", alpha, np.arange(1, n + 1))
    for j in range(n):
        for k in range(n):
            assert R[j, k] == pytest.approx(alpha ** abs(j - k), rel=1e-14, abs=1e-300)
    assert np.array_equal(R, R.T)


@given(kind=st.sampled_from(["indep", "exch", "ar1"]), n=st.integers(1, 6), alpha=st.floats(-0.15, 0.95))
def test_matrix_symmetric_unit_diagonal(kind, n, alpha):
    R = build_correlation(kind, alpha, np.arange(n))
    assert np.array_equal(R, R.T)
    assert np.all(np.diag(R) == 1.0)


def test_indep_is_identity():
    np.testing.assert_array_equal(build_correlation("indep", None, [0, 2, 7]), np.eye(3))


def test_un_principal_submatrix():
    A = np.array([[1.0, 0.5, 0.3, 0.1], [0.5, 1.0, 0.4, 0.2], [0.3, 0.4, 1.0, 0.6], [0.1, 0.2, 0.6, 1.0]])
    grid = (1.0, 2.0, 3.0, 4.0)
    R = build_correlation("un", A, [1, 3, 4], grid)
    np.testing.assert_array_equal(R, A[np.ix_([0, 2, 3], [0, 2, 3])])


@pytest.mark.parametrize("alpha", [1.0, -1.0, 1.5])
def test_alpha_out_of_range(alpha):
    with pytest.raises(ParameterError):
        build_correlation("exch", alpha, [1, 2])


def test_negative_ar1_with_fractional_gap():
    with pytest.raises(ParameterError):
        build_correlation("ar1", -0.3, [0.0, 0.5])


def test_un_requires_wave_on_grid():
    with pytest.raises(ParameterError):
        build_correlation("un", np.eye(2), [1.0, 5.0], (1.0, 2.0))


def test_exchangeable_non_pd_is_repaired_or_rejected(caplog):
    # alpha = -0.6 with n = 3 is not PD (1 + 2 alpha < 0)
    with caplog.at_level(logging.WARNING):
        try:
            R = build_correlation("exch", -0.6, [1, 2, 3], cluster=7)
        except NotPositiveDefiniteError as exc:
            assert exc.cluster == 7
        else:
            assert is_positive_definite(R)
    assert "repaired" in caplog.text


def test_repair_pd_keeps_unit_diagonal():
    M = np.array([[1.0, 0.95, -0.9], [0.95, 1.0, 0.9], [-0.9, 0.9, 1.0]])
    R, repaired = repair_pd(M)
    assert repaired
    assert is_positive_definite(R)
    np.testing.assert_allclose(np.diag(R), 1.0)
    same, flag = repair_pd(np.eye(3))
    assert not flag


def test_working_correlation_object():
    wc = WorkingCorrelation("Exchangeable", 0.3)
    assert wc.kind == "exch" and wc.n_params == 1
    un = WorkingCorrelation("un", np.eye(3), wave_grid=(0, 1, 2))
    assert un.n_params == 3
    assert un.matrix([0, 2]).shape == (2, 2)
    with pytest.raises(ParameterError):
        WorkingCorrelation("un", np.array([[1.0, 0.2], [0.3, 1.0]]))


def test_kind_names():
    assert normalize_kind("AR(1)") == "ar1"
    assert label("exchangeable") == "Exch"
    with pytest.raises(ParameterError):
        normalize_kind("toeplitz")
