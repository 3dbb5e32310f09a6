"""GEE marginal regression with PRESS-based working-correlation selection."""

from .correlation import WorkingCorrelation, build_correlation
from .criteria import CRITERIA, CriteriaReport, all_criteria, cic, gpc, qic, rj, sc, select
from .data import Cluster, LongitudinalDataset, read_long_csv, write_long_csv
from .engine import (FitOptions, GeeFit, exact_deletion, fit, leverage, one_step_deletion,
                     one_step_deletions, sandwich)
from .estimator import GEE, WorkingCorrelationSelector
from .exceptions import *  # noqa: F401,F403
from .families import Family, get_family
from .inference import LinearHypothesis, TestResult, score_test, wald_test
from .simgen import ScenarioSpec, all_scenarios, generate_cluster, generate_dataset, synthetic_cardia

__version__ = "0.1.0"
