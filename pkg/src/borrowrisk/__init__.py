"""Risk of borrowing side information in a two-source Gaussian model.

A binary mean theta is estimated under 0-1 loss from a primary datum y,
optionally borrowing a side datum x through a joint likelihood whose nuisance
scale s the analyst must pick. The package provides both Bayes rules, their
exact risks under nature's true scale sigma (misspecification is s != sigma),
a seeded Monte Carlo oracle for every closed form, sweep/figure pipelines,
an HTTP service, and a thin CLI.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .estimators import (
    EstimatorKind,
    decide_joint,
    decide_marginal,
    loglik_joint,
    loglik_marginal,
)
from .gauss import SeededRng, cdf, phi, sample_normal
from .model import AnalystConfig, NatureConfig, Observation, draw_world
from .montecarlo import MonteCarloResult, simulate_risk, simulate_sweep
from .risk import (
    Coefficients,
    RiskEstimate,
    SweepRow,
    coefficients,
    optimal_s,
    risk_joint_closed,
    risk_marginal,
    risk_ratio,
    s_grid,
    sweep,
)

__all__ = [
    "__version__",
    "AnalystConfig",
    "Coefficients",
    "EstimatorKind",
    "MonteCarloResult",
    "NatureConfig",
    "Observation",
    "RiskEstimate",
    "SeededRng",
    "SweepRow",
    "cdf",
    "coefficients",
    "decide_joint",
    "decide_marginal",
    "draw_world",
    "loglik_joint",
    "loglik_marginal",
    "optimal_s",
    "phi",
    "risk_joint_closed",
    "risk_marginal",
    "risk_ratio",
    "s_grid",
    "sample_normal",
    "simulate_risk",
    "simulate_sweep",
    "sweep",
]
