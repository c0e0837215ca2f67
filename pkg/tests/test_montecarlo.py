"""Simulation oracle against the closed forms, plus determinism contracts."""

from __future__ import annotations

import math

import pytest

from borrowrisk.estimators import EstimatorKind
from borrowrisk.model import AnalystConfig, NatureConfig
from borrowrisk.montecarlo import simulate_risk, simulate_sweep
from borrowrisk.risk import risk_joint_closed, risk_marginal

SEED = 20260808


def _closed(s: float, sigma: float) -> float:
    return risk_joint_closed(AnalystConfig(s, strict=False), NatureConfig(sigma)).value


@pytest.mark.parametrize("sigma", [1.0, 2.0, 3.0])
@pytest.mark.parametrize("s", [1.0, 2.0, 3.0])
def test_joint_estimate_matches_closed_form(s, sigma):
    result = simulate_risk(
        EstimatorKind.JOINT_XY, AnalystConfig(s), NatureConfig(sigma), 1_000_000, seed=SEED
    )
    assert abs(result.estimate - _closed(s, sigma)) <= 3.5 * result.std_error


@pytest.mark.parametrize("sigma", [1.0, 2.0, 3.0])
def test_marginal_estimate_matches_closed_form(sigma):
    result = simulate_risk("marginal", None, NatureConfig(sigma), 1_000_000, seed=SEED + 1)
    assert abs(result.estimate - risk_marginal()) <= 3.5 * result.std_error


def test_deterministic_for_fixed_seed_n_workers():
    first = simulate_risk("joint", AnalystConfig(1.0), NatureConfig(3.0), 200_000, seed=7, workers=3)
    second = simulate_risk("joint", AnalystConfig(1.0), NatureConfig(3.0), 200_000, seed=7, workers=3)
    assert first == second


def test_chunked_run_is_deterministic_and_complete():
    result = simulate_risk("marginal", None, NatureConfig(2.0), n=100_001, seed=11, workers=7)
    assert result.n == 100_001
    assert result.workers == 7
    assert 0.0 <= result.estimate <= 1.0


def test_std_error_formula_is_exact():
    result = simulate_risk("joint", AnalystConfig(2.0), NatureConfig(2.0), 50_000, seed=3)
    assert result.std_error == math.sqrt(result.estimate * (1.0 - result.estimate) / result.n)


def test_std_error_halves_when_n_quadruples():
    p = 0.3
    def formula(n: int) -> float:
        return math.sqrt(p * (1.0 - p) / n)
    assert formula(4 * 10_000) == formula(10_000) / 2.0


def test_validation_errors():
    with pytest.raises(ValueError):
        simulate_risk("joint", AnalystConfig(1.0), NatureConfig(1.0), 0, seed=1)
    with pytest.raises(ValueError):
        simulate_risk("joint", AnalystConfig(1.0), NatureConfig(1.0), 10, seed=1, workers=0)
    with pytest.raises(ValueError):
        simulate_risk("joint", None, NatureConfig(1.0), 10, seed=1)
    with pytest.raises(ValueError):
        simulate_risk("bogus", None, NatureConfig(1.0), 10, seed=1)


def test_sweep_ratios_match_closed_forms():
    rows = simulate_sweep(NatureConfig(3.0), [1.0, 3.0, 100.0], n=1_000_000, seed=SEED)
    marginal = risk_marginal()
    for row in rows:
        target = _closed(row.s, 3.0) / marginal
        std_err = math.sqrt(row.risk_joint * (1.0 - row.risk_joint) / 1_000_000)
        assert abs(row.ratio - target) <= 3.5 * std_err / marginal


def test_sweep_single_point_grid():
    rows = simulate_sweep(NatureConfig(2.0), [2.0], n=10_000, seed=5)
    assert len(rows) == 1
    assert rows[0].s == 2.0


def test_sweep_deterministic_for_fixed_inputs():
    first = simulate_sweep(NatureConfig(3.0), [1.0, 2.0], n=50_000, seed=11, workers=2)
    second = simulate_sweep(NatureConfig(3.0), [1.0, 2.0], n=50_000, seed=11, workers=2)
    assert first == second


def test_sweep_rejects_empty_grid():
    with pytest.raises(ValueError):
        simulate_sweep(NatureConfig(2.0), [], n=10, seed=1)


def test_sweep_marginal_column_keeps_closed_form():
    rows = simulate_sweep(NatureConfig(2.0), [1.0], n=1_000, seed=2)
    assert rows[0].risk_marginal == risk_marginal()
    assert rows[0].ratio == rows[0].risk_joint / rows[0].risk_marginal
