"""Distribution families: link, variance function and quasi-likelihood.

Only the three canonical pairs used for marginal models of longitudinal
data are provided. Each family clamps the linear predictor to
``[-ETA_CLAMP, ETA_CLAMP]`` before inverting the link; the binary family
additionally keeps ``mu`` inside ``[MU_EPS, 1 - MU_EPS]`` so that the
variance function never vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import expit

ETA_CLAMP = 30.0
MU_EPS = 1e-10

_ALIASES = {
    "binary": "binary-logit",
    "binomial": "binary-logit",
    "logit": "binary-logit",
    "binary-logit": "binary-logit",
    "poisson": "poisson-log",
    "poisson-log": "poisson-log",
    "gaussian": "gaussian-identity",
    "normal": "gaussian-identity",
    "gaussian-identity": "gaussian-identity",
}


@dataclass(frozen=True)
class Family:
    """A mean/variance specification for the marginal model.

    Parameters
    ----------
    kind : {"binary-logit", "poisson-log", "gaussian-identity"}
    """

    kind: str

    def __post_init__(self):
        if self.kind not in ("binary-logit", "poisson-log", "gaussian-identity"):
            raise ValueError(f"unknown family kind {self.kind!r}")

    @property
    def name(self) -> str:
        return self.kind.split("-")[0]

    @property
    def discrete(self) -> bool:
        return self.kind != "gaussian-identity"

    def clamp_mu(self, mu):
        mu = np.asarray(mu, dtype=float)
        if self.kind == "binary-logit":
            return np.clip(mu, MU_EPS, 1.0 - MU_EPS)
        if self.kind == "poisson-log":
            return np.maximum(mu, np.exp(-ETA_CLAMP))
        return mu

    def link(self, mu):
        mu = self.clamp_mu(mu)
        if self.kind == "binary-logit":
            return np.log(mu) - np.log1p(-mu)
        if self.kind == "poisson-log":
            return np.log(mu)
        return mu

    def inverse_link(self, eta):
        eta = np.asarray(eta, dtype=float)
        if self.kind == "gaussian-identity":
            return eta
        eta = np.clip(eta, -ETA_CLAMP, ETA_CLAMP)
        if self.kind == "binary-logit":
            return self.clamp_mu(expit(eta))
        return np.exp(eta)

    def mu_eta(self, eta, mu=None):
        """Derivative d mu / d eta, evaluated at the clamped mean."""
        eta = np.asarray(eta, dtype=float)
        if mu is None:
            mu = self.inverse_link(eta)
        if self.kind == "binary-logit":
            return mu * (1.0 - mu)
        if self.kind == "poisson-log":
            return mu
        return np.ones_like(eta)

    def link_deriv(self, mu):
        """g'(mu), the diagonal of L in D = L^-1 X."""
        mu = self.clamp_mu(mu)
        if self.kind == "binary-logit":
            return 1.0 / (mu * (1.0 - mu))
        if self.kind == "poisson-log":
            return 1.0 / mu
        return np.ones_like(mu)

    def variance(self, mu):
        """Variance function h(mu)."""
        mu = self.clamp_mu(mu)
        if self.kind == "binary-logit":
            return mu * (1.0 - mu)
        if self.kind == "poisson-log":
            return mu
        return np.ones_like(mu)

    def quasi_likelihood(self, y, mu, phi=1.0) -> float:
        """Quasi-likelihood summed over observations, scaled by ``phi``.

        Binary: ``y log(mu / (1 - mu)) + log(1 - mu)``;
        Poisson: ``y log(mu) - mu``; Gaussian: ``-(y - mu)^2 / 2``.
        """
        if phi <= 0:
            raise ValueError("phi must be positive")
        y = np.asarray(y, dtype=float)
        mu = self.clamp_mu(mu)
        if self.kind == "binary-logit":
            terms = y * (np.log(mu) - np.log1p(-mu)) + np.log1p(-mu)
        elif self.kind == "poisson-log":
            terms = y * np.log(mu) - mu
        else:
            terms = -0.5 * (y - mu) ** 2
        return float(phi * np.sum(terms))


def get_family(family) -> Family:
    """Resolve a family name or instance."""
    if isinstance(family, Family):
        return family
    try:
        return Family(_ALIASES[str(family).lower()])
    except KeyError:
        raise ValueError(
            f"unknown family {family!r}; expected one of binary, poisson, gaussian"
        ) from None


def mean_response(family, X, beta, offset=None):
    """Mean vector and its derivatives for one cluster (or stacked rows).

    Returns
    -------
    mu : ndarray (n,)
    D : ndarray (n, p)
        d mu / d beta, equal to ``L^-1 X``.
    A : ndarray (n,)
        Diagonal of A, the variance function at ``mu``.
    L : ndarray (n,)
        Diagonal of L, the link derivative g'(mu).
    """
    family = get_family(family)
    X = np.asarray(X, dtype=float)
    beta = np.asarray(beta, dtype=float)
    if X.ndim != 2 or X.shape[1] != beta.shape[0]:
        raise ValueError("X must be (n, p) with p == len(beta)")
    eta = X @ beta
    if offset is not None:
        eta = eta + offset
    mu = family.inverse_link(eta)
    L = family.link_deriv(mu)
    D = X / L[:, None]
    return mu, D, family.variance(mu), L
