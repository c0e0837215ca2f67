"""Simulation oracle for the closed-form risks.

Replays nature's generative process n times, applies a decision rule to each
world, and tallies 0-1 losses in integer counts (one float division at the
end, no accumulation error). Work is split into `workers` contiguous chunks;
chunk k draws from an independent PCG64 stream derived as
SeedSequence(entropy=seed, spawn_key=(k,)), so a run is reproducible for a
fixed (seed, n, workers) triple and chunks share no mutable state. Changing
`workers` changes the chunking and therefore legitimately changes the
realized estimate; determinism is promised per triple, not across worker
counts.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .estimators import EstimatorKind, decide_joint_batch, decide_marginal_batch
from .gauss import SeededRng
from .model import AnalystConfig, NatureConfig, draw_world_batch
from .risk import SweepRow, risk_marginal

__all__ = ["MonteCarloResult", "simulate_risk", "simulate_sweep"]

# Worlds are drawn in blocks of this many per chunk to bound memory; a build
# constant, so it never perturbs the (seed, n, workers) determinism contract.
_BLOCK = 1 << 20


@dataclass(frozen=True)
class MonteCarloResult:
    """Simulated risk with its binomial standard error."""

    estimate: float
    std_error: float
    n: int
    seed: int
    workers: int
    estimator: EstimatorKind


def _chunk_sizes(n: int, workers: int) -> list[int]:
    base, extra = divmod(n, workers)
    return [base + (1 if k < extra else 0) for k in range(workers)]


def _chunk_error_count(
    kind: EstimatorKind,
    analyst: AnalystConfig | None,
    nature: NatureConfig,
    size: int,
    seed: int,
    worker: int,
) -> int:
    rng = SeededRng.for_worker(seed, worker)
    errors = 0
    remaining = size
    while remaining > 0:
        block = min(remaining, _BLOCK)
        theta, x, y = draw_world_batch(rng, nature, size=block)
        if kind is EstimatorKind.MARGINAL_Y:
            decisions = decide_marginal_batch(y)
        else:
            decisions = decide_joint_batch(x, y, analyst)
        errors += int(np.count_nonzero(decisions != theta))
        remaining -= block
    return errors


def simulate_risk(
    kind: EstimatorKind | str,
    analyst: AnalystConfig | None,
    nature: NatureConfig,
    n: int,
    seed: int,
    workers: int = 1,
) -> MonteCarloResult:
    """Estimate a rule's risk from n fresh worlds.

    `analyst` is ignored for the marginal rule (may be None); it is required
    for the joint rule. Deterministic given (seed, n, workers).
    """
    kind = EstimatorKind(kind)
    n = int(n)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    workers = int(workers)
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    if kind is EstimatorKind.JOINT_XY and analyst is None:
        raise ValueError("the joint rule needs an analyst config")
    workers = min(workers, n)

    sizes = _chunk_sizes(n, workers)
    if workers == 1:
        counts = [_chunk_error_count(kind, analyst, nature, sizes[0], seed, 0)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            counts = list(
                pool.map(
                    lambda k: _chunk_error_count(kind, analyst, nature, sizes[k], seed, k),
                    range(workers),
                )
            )
    estimate = sum(counts) / n
    std_error = math.sqrt(estimate * (1.0 - estimate) / n)
    return MonteCarloResult(
        estimate=estimate,
        std_error=std_error,
        n=n,
        seed=int(seed),
        workers=workers,
        estimator=kind,
    )


def simulate_sweep(
    nature: NatureConfig,
    s_values: list[float],
    n: int,
    seed: int,
    workers: int = 1,
) -> list[SweepRow]:
    """Monte Carlo counterpart of a sweep: one simulated row per grid scale.

    The risk_marginal column keeps the closed form, so `ratio` is
    (simulated joint risk) / (exact marginal risk). Each grid point gets an
    independent stream via SeedSequence(seed).generate_state, making the
    whole sweep deterministic per (seed, n, grid, workers).
    """
    if len(s_values) == 0:
        raise ValueError("s_values must be nonempty")
    point_seeds = np.random.SeedSequence(int(seed)).generate_state(
        len(s_values), dtype=np.uint64
    )
    marginal = risk_marginal()
    rows = []
    for s, point_seed in zip(s_values, point_seeds):
        result = simulate_risk(
            EstimatorKind.JOINT_XY,
            AnalystConfig(float(s), strict=False),
            nature,
            n,
            seed=int(point_seed),
            workers=workers,
        )
        rows.append(
            SweepRow(
                s=float(s),
                risk_joint=result.estimate,
                risk_marginal=marginal,
                ratio=result.estimate / marginal,
            )
        )
    return rows
