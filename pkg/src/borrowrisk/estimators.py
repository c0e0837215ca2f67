"""Bayes decision rules under 0-1 loss.

The marginal rule classifies from y alone; the joint rule borrows the side
datum x through the analyst's scale s. Each rule exists in two equivalent
forms: an argmax over explicit log-likelihoods, and an algebraically reduced
linear threshold. Decisions use the thresholds (no density-product underflow
for extreme observations); the argmax forms are kept as the ground truth the
reductions are property-tested against.

Exact threshold ties have probability zero under the continuous model and
resolve to 1, so repeated runs are reproducible.
"""

from __future__ import annotations

import math
from enum import Enum

import numpy as np

from .gauss import SQRT_2PI
from .model import AnalystConfig, Observation

__all__ = [
    "EstimatorKind",
    "loglik_marginal",
    "loglik_joint",
    "decide_marginal",
    "decide_joint",
    "decide_marginal_batch",
    "decide_joint_batch",
]

_LOG_SQRT_2PI = math.log(SQRT_2PI)


class EstimatorKind(str, Enum):
    """Which decision rule a risk number refers to."""

    MARGINAL_Y = "marginal"
    JOINT_XY = "joint"


def _check_theta(theta: int) -> int:
    if theta not in (0, 1):
        raise ValueError(f"theta must be 0 or 1, got {theta!r}")
    return int(theta)


def loglik_marginal(y: float, theta: int) -> float:
    """Log-density of y under N(theta, 1): log phi(y - theta)."""
    theta = _check_theta(theta)
    r = y - theta
    return -0.5 * r * r - _LOG_SQRT_2PI


def loglik_joint(obs: Observation, theta: int, analyst: AnalystConfig) -> float:
    """Analyst's joint log-density of (x, y) given theta, shift integrated out.

    Under the analyst's model x | theta ~ N(theta, s^2), so this is
    log phi(y - theta) + log phi((x - theta)/s) - log s.
    """
    theta = _check_theta(theta)
    u = (obs.x - theta) / analyst.s
    return loglik_marginal(obs.y, theta) - 0.5 * u * u - _LOG_SQRT_2PI - math.log(analyst.s)


def decide_marginal(y: float) -> int:
    """Marginal rule: 1 iff y >= 1/2 (exact tie resolves to 1)."""
    return 1 if y >= 0.5 else 0


def decide_joint(obs: Observation, analyst: AnalystConfig) -> int:
    """Joint rule, reduced form: 1 iff y + x/s^2 >= (1/s^2 + 1)/2."""
    b = 1.0 / (analyst.s * analyst.s)
    return 1 if obs.y + b * obs.x >= 0.5 * (b + 1.0) else 0


def decide_marginal_batch(y: np.ndarray) -> np.ndarray:
    """Vectorized decide_marginal."""
    return (np.asarray(y) >= 0.5).astype(np.int64)


def decide_joint_batch(x: np.ndarray, y: np.ndarray, analyst: AnalystConfig) -> np.ndarray:
    """Vectorized decide_joint."""
    b = 1.0 / (analyst.s * analyst.s)
    return (np.asarray(y) + b * np.asarray(x) >= 0.5 * (b + 1.0)).astype(np.int64)
