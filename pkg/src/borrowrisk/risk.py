"""Closed-form risks, the risk ratio, sweeps over s, and the optimal s.

The marginal rule errs with probability Phi(-1/2) regardless of sigma. For
the joint rule, write b = 1/s^2 and a = -(1/s^2 + 1)/2; the rule decides 1
exactly when Z := Y + bX + a is nonnegative. Given theta, Z is normal with
variance v = 1 + b^2 sigma^2 and mean a (theta = 0) or 1 + b + a (theta = 1),
so the risk is the average of the two conditional error probabilities:

    risk = 1/2 * {1 - Phi(-a/sqrt(v))} + 1/2 * Phi((-1 - b - a)/sqrt(v))

Because 1 + b + a = -a = (1 + b)/2, both terms coincide and the whole thing
collapses to Phi(-(1 + b)/(2 sqrt(v))). The two-term form is what this module
returns; the collapsed form is recomputed on every call as a consistency
check, and makes the shape of the curve transparent: the argument is maximal
at b = 1/sigma^2, so the risk has its unique minimum at s = sigma and rises
on both sides.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .gauss import cdf
from .model import AnalystConfig, NatureConfig

__all__ = [
    "Coefficients",
    "RiskEstimate",
    "SweepRow",
    "coefficients",
    "risk_marginal",
    "risk_joint_closed",
    "risk_ratio",
    "s_grid",
    "sweep",
    "optimal_s",
]


@dataclass(frozen=True)
class Coefficients:
    """Linear-threshold coefficients of the joint rule: Z = Y + b*X + a."""

    a: float
    b: float


def coefficients(analyst: AnalystConfig) -> Coefficients:
    """b = 1/s^2 and a = -(1/s^2 + 1)/2 for the analyst's scale s."""
    b = 1.0 / (analyst.s * analyst.s)
    return Coefficients(a=-0.5 * (b + 1.0), b=b)


def risk_marginal() -> float:
    """Error rate of the marginal rule: Phi(-1/2), independent of sigma."""
    return cdf(-0.5)


@dataclass(frozen=True)
class RiskEstimate:
    """Closed-form joint-rule risk at one (s, sigma) pair."""

    value: float
    s: float
    sigma: float

    def __post_init__(self) -> None:
        if not 0.0 < self.value < 0.5:
            raise ValueError(f"joint risk must lie in (0, 0.5), got {self.value}")


@dataclass(frozen=True)
class SweepRow:
    """One point of a risk-ratio curve over the analyst's scale s."""

    s: float
    risk_joint: float
    risk_marginal: float
    ratio: float


def risk_joint_closed(analyst: AnalystConfig, nature: NatureConfig) -> RiskEstimate:
    """Exact error rate of the joint rule when nature's scale is sigma.

    Returns the two-term average of the conditional error probabilities of
    Z = Y + bX + a; agreement with the collapsed single-term form is asserted
    to 1e-12 on every evaluation.
    """
    c = coefficients(analyst)
    v = 1.0 + c.b * c.b * nature.sigma * nature.sigma
    root = math.sqrt(v)
    err_given_0 = 0.5 * (1.0 - cdf(-c.a / root))
    err_given_1 = 0.5 * cdf((-1.0 - c.b - c.a) / root)
    value = err_given_0 + err_given_1
    collapsed = cdf(-0.5 * (1.0 + c.b) / root)
    assert abs(value - collapsed) <= 1e-12, (analyst.s, nature.sigma, value, collapsed)
    return RiskEstimate(value=value, s=analyst.s, sigma=nature.sigma)


def risk_ratio(analyst: AnalystConfig, nature: NatureConfig) -> float:
    """Joint-rule risk over marginal-rule risk; > 1 means borrowing x hurt."""
    return risk_joint_closed(analyst, nature).value / risk_marginal()


def s_grid(s_min: float, s_max: float, points: int, log_spaced: bool = True) -> list[float]:
    """Ascending grid of `points` scales over [s_min, s_max], endpoints exact."""
    s_min = float(s_min)
    s_max = float(s_max)
    if not (math.isfinite(s_min) and math.isfinite(s_max)) or not 0.0 < s_min < s_max:
        raise ValueError(f"need 0 < s_min < s_max, got [{s_min}, {s_max}]")
    points = int(points)
    if points < 2:
        raise ValueError(f"need at least 2 grid points, got {points}")
    if log_spaced:
        span = math.log(s_max / s_min)
        grid = [s_min * math.exp(span * i / (points - 1)) for i in range(points)]
    else:
        step = (s_max - s_min) / (points - 1)
        grid = [s_min + step * i for i in range(points)]
    grid[0] = s_min
    grid[-1] = s_max
    return grid


def sweep(
    nature: NatureConfig,
    s_min: float,
    s_max: float,
    points: int,
    log_spaced: bool = True,
) -> list[SweepRow]:
    """Risk-ratio curve on a grid of scales, rows ascending in s.

    The grid may extend below s = 1 (no realizable prior there), which is the
    whole point of a misspecification scan; configs are built permissive.
    """
    marginal = risk_marginal()
    rows = []
    for s in s_grid(s_min, s_max, points, log_spaced=log_spaced):
        joint = risk_joint_closed(AnalystConfig(s, strict=False), nature).value
        rows.append(
            SweepRow(s=s, risk_joint=joint, risk_marginal=marginal, ratio=joint / marginal)
        )
    return rows


def optimal_s(
    nature: NatureConfig,
    s_min: float,
    s_max: float,
    points: int,
    log_spaced: bool = True,
) -> float:
    """Grid point minimizing the joint-rule risk; lands on sigma within one step.

    The grid must bracket sigma (s_min <= sigma <= s_max), otherwise the
    minimizer would sit on an arbitrary grid edge. Ties go to the smallest s.
    """
    if not s_min <= nature.sigma <= s_max:
        raise ValueError(
            f"grid [{s_min}, {s_max}] does not bracket sigma = {nature.sigma}"
        )
    grid = s_grid(s_min, s_max, points, log_spaced=log_spaced)
    return min(
        grid,
        key=lambda s: risk_joint_closed(AnalystConfig(s, strict=False), nature).value,
    )
