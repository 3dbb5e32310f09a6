"""Correlated binary and Poisson longitudinal outcomes via a Gaussian copula.

Each response is ``y = F^-1(Phi(z))`` for a latent standard normal ``z``;
latent correlations are solved pairwise so that the *observed* Pearson
correlation of every pair hits its target. Margins are exact by
construction (Poisson support truncated at ``mu + 20 sqrt(mu)``).

Random streams
--------------
Replicate ``k`` of a scenario draws from
``Generator(Philox(SeedSequence([seed, crc32(cell label), k])))``, a
counter-based stream that depends only on the seed, the scenario cell and
the replicate index, never on scheduling order.
"""

from __future__ import annotations

import logging
import math
import zlib
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from scipy import optimize, special

from .correlation import is_positive_definite, normalize_kind, repair_pd
from .data import Cluster, LongitudinalDataset
from .exceptions import GenerationError, RangeViolationError

logger = logging.getLogger(__name__)

DELTA_LIMIT = 0.999
_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(64)
_Z_CLIP = 38.0

TRUE_BETA = {
    "binary": (1.0, 0.38, 0.35),
    "poisson": (1.0, 0.20, 0.40),
}
UNBALANCED_SIZES = (3, 4, 5)
UNBALANCED_PROBS = (0.15, 0.15, 0.70)
UN_LAMBDA = 0.5


def _family_name(family) -> str:
    f = str(getattr(family, "kind", family)).lower()
    if f.startswith("binary") or f.startswith("binom"):
        return "binary"
    if f.startswith("poisson"):
        return "poisson"
    raise ValueError(f"simulation supports binary and poisson margins, not {family!r}")


# ---------------------------------------------------------------- bivariate normal


def bvn_cdf(a, b, rho):
    """P(Z1 <= a, Z2 <= b) for standard normals with correlation ``rho``.

    Uses ``Phi(a) Phi(b) + (1/2pi) int_0^{asin rho}
    exp(-(a^2 + b^2 - 2ab sin t) / (2 cos^2 t)) dt`` with 64-point
    Gauss-Legendre quadrature; the integrand is smooth for |rho| < 1.
    """
    a = np.clip(np.asarray(a, dtype=float), -_Z_CLIP, _Z_CLIP)
    b = np.clip(np.asarray(b, dtype=float), -_Z_CLIP, _Z_CLIP)
    base = special.ndtr(a) * special.ndtr(b)
    if rho == 0:
        return base
    top = math.asin(rho)
    theta = 0.5 * top * (_GL_NODES + 1.0)
    s = np.sin(theta)
    c2 = np.cos(theta) ** 2
    a_ = a[..., None]
    b_ = b[..., None]
    integrand = np.exp(-(a_ * a_ + b_ * b_ - 2.0 * a_ * b_ * s) / (2.0 * c2))
    return base + (0.5 * top) * (integrand @ _GL_WEIGHTS) / (2.0 * math.pi)


# ---------------------------------------------------------------- margins


@dataclass(frozen=True)
class Margin:
    family: str
    mu: float
    thresholds: np.ndarray = field(repr=False)  # latent cut points c_k = Phi^-1(F(k))
    mean: float = 0.0
    var: float = 0.0

    def quantile(self, z):
        """Map latent normals to outcomes: y = #{k : c_k < z}."""
        return np.searchsorted(self.thresholds, z, side="left").astype(float)


@lru_cache(maxsize=4096)
def margin(family, mu) -> Margin:
    family = _family_name(family)
    mu = float(mu)
    if family == "binary":
        if not 0.0 < mu < 1.0:
            raise ValueError(f"binary margin needs 0 < mu < 1, got {mu}")
        cdf = np.array([1.0 - mu])
    else:
        if not mu > 0:
            raise ValueError(f"poisson margin needs mu > 0, got {mu}")
        kmax = int(math.ceil(mu + 20.0 * math.sqrt(mu)))
        cdf = special.pdtr(np.arange(kmax), mu)
    cdf = cdf[cdf < 1.0]
    pmf = np.diff(np.concatenate([[0.0], cdf, [1.0]]))
    support = np.arange(pmf.shape[0], dtype=float)
    mean = float(pmf @ support)
    var = float(pmf @ (support - mean) ** 2)
    thresholds = special.ndtri(cdf)
    thresholds.setflags(write=False)
    return Margin(family, mu, thresholds, mean, var)


def _survival_products(ma: Margin, mb: Margin, delta):
    """E[Ya Yb] = sum_{j,k} P(Ya > j, Yb > k) under latent correlation delta."""
    # P(Za > c_j, Zb > d_k) = Phi2(-c_j, -d_k; delta)
    cj = -ma.thresholds[:, None]
    dk = -mb.thresholds[None, :]
    return float(np.sum(bvn_cdf(*np.broadcast_arrays(cj, dk), delta)))


def pearson_from_latent(family, mu_a, mu_b, delta) -> float:
    """Observed Pearson correlation of two margins at latent correlation ``delta``."""
    fa, fb = _pair(family)
    ma, mb = margin(fa, mu_a), margin(fb, mu_b)
    exy = _survival_products(ma, mb, delta)
    return (exy - ma.mean * mb.mean) / math.sqrt(ma.var * mb.var)


def _pair(family):
    if isinstance(family, (tuple, list)):
        return _family_name(family[0]), _family_name(family[1])
    f = _family_name(family)
    return f, f


# ---------------------------------------------------------------- bounds and solving


@dataclass(frozen=True)
class CorrelationBounds:
    lo: float
    hi: float

    def __contains__(self, rho) -> bool:
        return self.lo <= rho <= self.hi


@lru_cache(maxsize=1024)
def _bounds_cached(fa, fb, mu_a, mu_b):
    if fa == fb == "binary":
        pa, pb = mu_a, mu_b
        qa, qb = 1.0 - pa, 1.0 - pb
        hi = min(math.sqrt(pa * qb / (qa * pb)), math.sqrt(qa * pb / (pa * qb)))
        lo = max(-math.sqrt(pa * pb / (qa * qb)), -math.sqrt(qa * qb / (pa * pb)))
        return CorrelationBounds(lo, hi)
    ma, mb = margin(fa, mu_a), margin(fb, mu_b)
    u = (np.arange(1_000_000) + 0.5) / 1_000_000
    z = special.ndtri(u)
    ya, yb = ma.quantile(z), mb.quantile(z)
    sd = math.sqrt(ma.var * mb.var)
    hi = (float(np.mean(ya * yb)) - ma.mean * mb.mean) / sd
    lo = (float(np.mean(ya * yb[::-1])) - ma.mean * mb.mean) / sd
    return CorrelationBounds(max(lo, -1.0), min(hi, 1.0))


def feasible_bounds(family, mu_a, mu_b) -> CorrelationBounds:
    """Attainable Pearson correlation range for two margins (Frechet bounds).

    Binary pairs use the closed form; Poisson pairs use comonotone and
    antimonotone couplings on a 10^6-point midpoint grid of uniforms.
    """
    fa, fb = _pair(family)
    margin(fa, mu_a), margin(fb, mu_b)  # validates the means
    return _bounds_cached(fa, fb, float(mu_a), float(mu_b))


def _range_violation(family, mu_a, mu_b, rho, bounds):
    return RangeViolationError(
        f"target correlation {rho:g} for {family} margins mu=({mu_a:.6g}, {mu_b:.6g}) "
        f"is outside the attainable range [{bounds.lo:.6g}, {bounds.hi:.6g}]",
        margins=(mu_a, mu_b), bounds=bounds, target=rho,
    )


@lru_cache(maxsize=65536)
def _solve_cached(fa, fb, mu_a, mu_b, rho):
    if rho == 0.0:
        return 0.0
    fam = (fa, fb)
    bounds = feasible_bounds(fam, mu_a, mu_b)
    if rho not in bounds:
        raise _range_violation(fa, mu_a, mu_b, rho, bounds)
    lo_val = pearson_from_latent(fam, mu_a, mu_b, -DELTA_LIMIT)
    hi_val = pearson_from_latent(fam, mu_a, mu_b, DELTA_LIMIT)
    if not lo_val <= rho <= hi_val:
        raise _range_violation(fa, mu_a, mu_b, rho, CorrelationBounds(lo_val, hi_val))
    return float(optimize.brentq(
        lambda d: pearson_from_latent(fam, mu_a, mu_b, d) - rho,
        -DELTA_LIMIT, DELTA_LIMIT, xtol=1e-12, rtol=1e-12,
    ))


def solve_latent_correlation(family, mu_a, mu_b, rho) -> float:
    """Latent normal correlation giving observed correlation ``rho``.

    Raises RangeViolationError when ``rho`` is not attainable; targets are
    never clipped.
    """
    fa, fb = _pair(family)
    return _solve_cached(fa, fb, float(mu_a), float(mu_b), float(rho))


# ---------------------------------------------------------------- clusters


def check_feasible(family, mu, R_target):
    """Verify every pair's target lies inside its attainable range."""
    mu = np.asarray(mu, dtype=float)
    R_target = np.asarray(R_target, dtype=float)
    for a in range(mu.shape[0]):
        for b in range(a + 1, mu.shape[0]):
            bounds = feasible_bounds(family, mu[a], mu[b])
            if R_target[a, b] not in bounds:
                raise _range_violation(_pair(family)[0], mu[a], mu[b], R_target[a, b], bounds)


def latent_correlation_matrix(family, mu, R_target):
    """Entrywise-solved latent correlation matrix, repaired to PD if needed."""
    mu = np.asarray(mu, dtype=float)
    n = mu.shape[0]
    check_feasible(family, mu, R_target)
    S = np.eye(n)
    for a in range(n):
        for b in range(a + 1, n):
            S[a, b] = S[b, a] = solve_latent_correlation(family, mu[a], mu[b], R_target[a, b])
    if not is_positive_definite(S):
        S, _ = repair_pd(S, what="latent copula correlation")
        if not is_positive_definite(S):
            raise GenerationError("latent correlation matrix is not repairable to PD")
    return S


@lru_cache(maxsize=8192)
def _latent_factor(family, mu, R_bytes, n):
    R = np.frombuffer(R_bytes).reshape(n, n)
    S = latent_correlation_matrix(family, np.array(mu), R)
    chol = np.linalg.cholesky(S)
    chol.setflags(write=False)
    return chol


def latent_factor(family, mu, R_target):
    mu = tuple(float(m) for m in np.asarray(mu).reshape(-1))
    R = np.ascontiguousarray(R_target, dtype=float)
    return _latent_factor(_family_name(family), mu, R.tobytes(), len(mu))


def generate_cluster(family, mu, R_target, rng, size=None):
    """Draw one response vector (or ``size`` vectors) with margins ``mu``."""
    family = _family_name(family)
    mu = np.asarray(mu, dtype=float).reshape(-1)
    n = mu.shape[0]
    R_target = np.asarray(R_target, dtype=float).reshape(n, n)
    chol = latent_factor(family, mu, R_target)
    shape = (n,) if size is None else (size, n)
    z = rng.standard_normal(shape) @ chol.T
    y = np.empty(shape)
    for t in range(n):
        y[..., t] = margin(family, mu[t]).quantile(z[..., t])
    return y


# ---------------------------------------------------------------- scenarios


def target_correlation(structure, alpha, waves, lam=UN_LAMBDA):
    """True observed-scale correlation: AR1 alpha^|dt|, Exch alpha, UN alpha^(|dt|^lam)."""
    structure = normalize_kind(structure)
    waves = np.asarray(waves, dtype=float)
    gaps = np.abs(waves[:, None] - waves[None, :])
    if structure == "ar1":
        R = np.power(alpha, gaps)
    elif structure == "exch":
        R = np.full(gaps.shape, float(alpha))
    elif structure == "un":
        R = np.power(alpha, np.power(gaps, lam))
    else:
        R = np.zeros(gaps.shape)
    np.fill_diagonal(R, 1.0)
    return R


@dataclass(frozen=True)
class ScenarioSpec:
    """One cell of the simulation design."""

    family: str
    balance: str
    N: int
    structure: str
    alpha: float
    beta: tuple = ()
    reps: int = 1000
    seed: int = 20240101
    n_max: int = 5

    def __post_init__(self):
        object.__setattr__(self, "family", _family_name(self.family))
        bal = str(self.balance).lower()
        if bal not in ("balanced", "unbalanced"):
            raise ValueError("balance must be 'balanced' or 'unbalanced'")
        object.__setattr__(self, "balance", bal)
        kind = normalize_kind(self.structure)
        if kind not in ("ar1", "exch", "un"):
            raise ValueError("true structure must be AR1, Exch or UN")
        object.__setattr__(self, "structure", kind)
        if not 0.0 < float(self.alpha) < 1.0:
            raise ValueError("alpha must lie in (0, 1)")
        object.__setattr__(self, "alpha", float(self.alpha))
        if int(self.N) < 1 or int(self.reps) < 0:
            raise ValueError("N must be positive and reps non-negative")
        object.__setattr__(self, "N", int(self.N))
        object.__setattr__(self, "reps", int(self.reps))
        beta = tuple(float(b) for b in (self.beta or TRUE_BETA[self.family]))
        if len(beta) != 3:
            raise ValueError("beta must have three entries (intercept, x1, x2)")
        object.__setattr__(self, "beta", beta)
        assert abs(sum(UNBALANCED_PROBS) - 1.0) < 1e-12

    @property
    def label(self) -> str:
        return f"{self.family}-{self.balance}-{self.structure}-a{self.alpha:g}-N{self.N}"

    @property
    def waves(self):
        return np.arange(1, self.n_max + 1, dtype=float)

    def target_matrix(self):
        return target_correlation(self.structure, self.alpha, self.waves)

    def rng(self, replicate_index):
        key = zlib.crc32(self.label.encode("utf-8"))
        ss = np.random.SeedSequence([int(self.seed), key, int(replicate_index)])
        return np.random.Generator(np.random.Philox(ss))

    @classmethod
    def parse(cls, text, **overrides):
        """Parse ``family,balance,structure,alpha,N`` (e.g. ``binary,balanced,ar1,0.2,50``)."""
        parts = [s.strip() for s in str(text).replace(";", ",").split(",") if s.strip()]
        if len(parts) != 5:
            raise ValueError(f"scenario descriptor needs 5 fields, got {text!r}")
        fam, bal, struct, alpha, N = parts
        return cls(fam, bal, int(N), struct, float(alpha), **overrides)


def all_scenarios(reps=1000, seed=20240101):
    """The 48-cell design: family x balance x N x true structure x alpha."""
    return [
        ScenarioSpec(fam, bal, N, struct, alpha, reps=reps, seed=seed)
        for fam in ("binary", "poisson")
        for bal in ("balanced", "unbalanced")
        for alpha in (0.2, 0.4)
        for struct in ("ar1", "exch", "un")
        for N in (50, 100)
    ]


def mean_function(family, eta):
    return special.expit(eta) if _family_name(family) == "binary" else np.exp(eta)


def expected_mean(spec: ScenarioSpec) -> float:
    """Grand mean of the response over the covariate law (x1, x2 ~ Bernoulli(0.5))."""
    b0, b1, b2 = spec.beta
    eta = np.array([b0, b0 + b1, b0 + b2, b0 + b1 + b2])
    return float(np.mean(mean_function(spec.family, eta)))


def check_design_feasible(spec: ScenarioSpec):
    """Check every wave pair of every attainable mean vector of ``spec``.

    ``x1`` is constant within a subject and ``x2`` varies by wave, so a pair
    of waves sees means from ``b0 + b1 x1 + b2 {0, 1}``.
    """
    b0, b1, b2 = spec.beta
    R = spec.target_matrix()
    T = R.shape[0]
    for x1 in (0.0, 1.0):
        mus = [float(mean_function(spec.family, b0 + b1 * x1 + b2 * x2)) for x2 in (0.0, 1.0)]
        for a in range(T):
            for b in range(a + 1, T):
                for mu_a in mus:
                    for mu_b in mus:
                        check_feasible(spec.family, [mu_a, mu_b], R[np.ix_([a, b], [a, b])])


def generate_dataset(spec: ScenarioSpec, replicate_index: int) -> LongitudinalDataset:
    """Replicate ``replicate_index`` of ``spec``; design columns (intercept, x1, x2).

    Responses are generated on all waves and unbalanced subjects keep the
    first ``n_i`` of them.
    """
    rng = spec.rng(replicate_index)
    N, T = spec.N, spec.n_max
    if spec.balance == "balanced":
        sizes = np.full(N, T)
    else:
        sizes = rng.choice(np.array(UNBALANCED_SIZES), size=N, p=np.array(UNBALANCED_PROBS))
    x1 = rng.binomial(1, 0.5, size=N).astype(float)
    x2 = rng.binomial(1, 0.5, size=(N, T)).astype(float)
    z = rng.standard_normal((N, T))
    b0, b1, b2 = spec.beta
    R = spec.target_matrix()
    waves = spec.waves
    clusters = []
    for i in range(N):
        mu = mean_function(spec.family, b0 + b1 * x1[i] + b2 * x2[i])
        chol = latent_factor(spec.family, mu, R)
        zi = chol @ z[i]
        y = np.array([margin(spec.family, m).quantile(v) for m, v in zip(mu, zi)])
        n = int(sizes[i])
        X = np.column_stack([np.ones(n), np.full(n, x1[i]), x2[i, :n]])
        clusters.append(Cluster(i + 1, y[:n], X, waves[:n]))
    return LongitudinalDataset(tuple(clusters), tuple(waves), spec.family, ("intercept", "x1", "x2"))


# ---------------------------------------------------------------- CARDIA-shaped fixture

CARDIA_YEARS = (0.0, 2.0, 5.0, 7.0, 10.0, 15.0)
CARDIA_COLUMNS = (
    "intercept", "age10", "age10_sq", "some_college", "college_degree", "year", "year_sq", "year_cu",
)
CARDIA_BETA = (-0.011, 0.327, -0.593, -0.693, -1.769, 0.468, -0.935, 0.353)


def synthetic_cardia(n_subjects=400, seed=0, rho_per_year=0.9, beta=CARDIA_BETA):
    """A synthetic smoking-status panel shaped like the CARDIA analysis.

    Six unequally spaced visits (years 0, 2, 5, 7, 10, 15), some visits
    missed at random, covariates age/10 (centred at 25 years), its square,
    two education indicators and a cubic in decades since baseline.
    True association is AR(1) in calendar time with ``rho_per_year``.
    """
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence([int(seed), 1986])))
    years = np.array(CARDIA_YEARS)
    decade = years / 10.0
    R = np.power(rho_per_year, np.abs(years[:, None] - years[None, :]))
    clusters = []
    beta = np.asarray(beta, dtype=float)
    for i in range(n_subjects):
        age = rng.uniform(18.0, 30.0)
        a10 = (age - 25.0) / 10.0
        edu = rng.choice(3, p=[0.45, 0.30, 0.25])
        observed = rng.random(6) < 0.85
        observed[0] = True
        X = np.column_stack([
            np.ones(6), np.full(6, a10), np.full(6, a10 ** 2),
            np.full(6, float(edu == 1)), np.full(6, float(edu == 2)),
            decade, decade ** 2, decade ** 3,
        ])
        mu = special.expit(X @ beta)
        y = generate_cluster("binary", mu, R, rng)
        clusters.append(Cluster(i + 1, y[observed], X[observed], years[observed]))
    return LongitudinalDataset(tuple(clusters), CARDIA_YEARS, "binary", CARDIA_COLUMNS)
