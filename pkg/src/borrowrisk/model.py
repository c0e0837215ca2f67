"""Two-source Gaussian world: configuration types and the generative draw.

The estimand theta is a fair coin on {0, 1}. The primary datum is
y ~ N(theta, 1). The side datum is x ~ N(theta + mu, 1), where the nuisance
shift mu is itself N(0, sigma^2 - 1) under nature, so marginally
x | theta ~ N(theta, sigma^2). The analyst instead integrates mu over a
N(0, w^2) prior with w^2 = s^2 - 1, i.e. works with x | theta ~ N(theta, s^2).
Misspecification is exactly s != sigma.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .gauss import SeededRng

__all__ = [
    "NatureConfig",
    "AnalystConfig",
    "Observation",
    "draw_world",
    "draw_world_batch",
]


@dataclass(frozen=True)
class NatureConfig:
    """True data-generating process; sigma is the marginal sd of x given theta."""

    sigma: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "sigma", float(self.sigma))
        if not math.isfinite(self.sigma) or self.sigma < 1.0:
            raise ValueError(
                f"sigma must be finite and >= 1 (the shift variance sigma^2 - 1 "
                f"cannot be negative), got {self.sigma}"
            )

    @property
    def mu_sd(self) -> float:
        """Standard deviation of nature's shift distribution, sqrt(sigma^2 - 1)."""
        return math.sqrt(self.sigma * self.sigma - 1.0)


@dataclass(frozen=True)
class AnalystConfig:
    """Analyst's marginal scale s for the side datum; s^2 = 1 + prior variance.

    strict=True (default) enforces s >= 1, i.e. a realizable prior with
    w^2 = s^2 - 1 >= 0. strict=False admits any s > 0 so misspecification
    scans can cross below 1, where no actual prior exists.
    """

    s: float
    strict: bool = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "s", float(self.s))
        if not math.isfinite(self.s) or self.s <= 0.0:
            raise ValueError(f"s must be finite and > 0, got {self.s}")
        if self.strict and self.s < 1.0:
            raise ValueError(
                f"s = {self.s} < 1 implies a negative prior variance; "
                f"pass strict=False to allow it anyway"
            )

    @property
    def prior_variance(self) -> float:
        """Implied prior variance w^2 = s^2 - 1; negative when s < 1."""
        return self.s * self.s - 1.0

    @property
    def realizable(self) -> bool:
        """Whether some actual prior over the shift produces this scale."""
        return self.s >= 1.0


@dataclass(frozen=True)
class Observation:
    """One joint draw: side datum x and primary datum y."""

    x: float
    y: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", float(self.x))
        object.__setattr__(self, "y", float(self.y))
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"observation must be finite, got x={self.x}, y={self.y}")


def draw_world_batch(rng: SeededRng, nature: NatureConfig, size: int | None):
    """Draw `size` worlds from nature; returns (theta, x, y) arrays.

    theta is a fair coin, mu ~ N(0, sigma^2 - 1), y ~ N(theta, 1) and
    x ~ N(theta + mu, 1). With size=None the three values are scalars.
    """
    theta = rng.coin(size=size)
    mu = rng.normal(0.0, nature.mu_sd, size=size)
    y = rng.normal(theta, 1.0, size=size)
    x = rng.normal(theta + mu, 1.0, size=size)
    return theta, x, y


def draw_world(rng: SeededRng, nature: NatureConfig) -> tuple[int, Observation]:
    """Draw one (theta, observation) pair from nature's joint process."""
    theta, x, y = draw_world_batch(rng, nature, size=None)
    return int(theta), Observation(x=x, y=y)
