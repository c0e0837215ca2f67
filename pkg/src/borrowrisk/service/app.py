"""HTTP facade over the closed-form and Monte Carlo risk machinery.

Stateless by construction: every endpoint is a pure function of its request
body, so the service scales horizontally and responses are reproducible
(simulations are pinned by their seed). CSV and SVG payloads are rendered by
borrowrisk.render, the same code path the CLI consumes, which keeps output
byte-stable no matter which front end asked.
"""

from __future__ import annotations

from typing import Literal

from fastapi import FastAPI, Query, Response

from .. import __version__
from ..estimators import EstimatorKind
from ..model import AnalystConfig, NatureConfig
from ..montecarlo import simulate_risk, simulate_sweep
from ..render import figure_svg, fmt_sig, sweep_csv
from ..risk import risk_joint_closed, risk_marginal, s_grid, sweep
from .schemas import (
    FigureRequest,
    Health,
    RiskReport,
    RiskRequest,
    SimulateReport,
    SimulateRequest,
    SweepReport,
    SweepRequest,
    SweepRowModel,
)

__all__ = ["app", "create_app"]

_UNREALIZABLE = "s < 1 corresponds to no realizable prior (implied prior variance s^2 - 1 < 0)"


def _scale_warning(s_smallest: float) -> str | None:
    return _UNREALIZABLE if s_smallest < 1.0 else None


def _overlay_indices(points: int, count: int = 10) -> list[int]:
    """Up to `count` evenly spaced grid indices, endpoints included."""
    if points <= count:
        return list(range(points))
    return sorted({round(i * (points - 1) / (count - 1)) for i in range(count)})


def create_app() -> FastAPI:
    app = FastAPI(
        title="borrowrisk",
        version=__version__,
        description=(
            "Misclassification risk of borrowing a side datum through a joint "
            "Gaussian likelihood, exact and simulated."
        ),
    )

    @app.get("/healthz", response_model=Health)
    def healthz() -> Health:
        return Health(status="ok", version=__version__)

    @app.post("/risk", response_model=RiskReport)
    def evaluate_risk(req: RiskRequest) -> RiskReport:
        analyst = AnalystConfig(req.s, strict=False)
        nature = NatureConfig(req.sigma)
        marginal = risk_marginal()
        joint = risk_joint_closed(analyst, nature).value
        return RiskReport(
            s=req.s,
            sigma=req.sigma,
            risk_marginal=marginal,
            risk_joint=joint,
            ratio=joint / marginal,
            warning=_scale_warning(req.s),
        )

    @app.post("/simulate", response_model=SimulateReport)
    def run_simulation(req: SimulateRequest) -> SimulateReport:
        nature = NatureConfig(req.sigma)
        if req.kind == "joint":
            analyst = AnalystConfig(req.s, strict=False)
            reference = risk_joint_closed(analyst, nature).value
            warning = _scale_warning(req.s)
        else:
            analyst = None
            reference = risk_marginal()
            warning = None
        result = simulate_risk(
            EstimatorKind(req.kind), analyst, nature, req.n, req.seed, req.workers
        )
        z_score = (result.estimate - reference) / result.std_error if result.std_error else 0.0
        return SimulateReport(
            kind=req.kind,
            s=req.s if req.kind == "joint" else None,
            sigma=req.sigma,
            n=result.n,
            seed=result.seed,
            workers=result.workers,
            estimate=result.estimate,
            std_error=result.std_error,
            reference=reference,
            z_score=z_score,
            warning=warning,
        )

    @app.post("/sweep")
    def run_sweep(
        req: SweepRequest,
        fmt: Literal["json", "csv"] = Query("json", alias="format"),
    ):
        rows = sweep(NatureConfig(req.sigma), req.s_min, req.s_max, req.points, req.log_spaced)
        if fmt == "csv":
            return Response(content=sweep_csv(rows), media_type="text/csv; charset=utf-8")
        return SweepReport(
            sigma=req.sigma,
            rows=[SweepRowModel(**vars(row)) for row in rows],
            warning=_scale_warning(req.s_min),
        )

    @app.post("/figure")
    def run_figure(
        req: FigureRequest,
        fmt: Literal["csv", "svg"] = Query("csv", alias="format"),
    ) -> Response:
        nature = NatureConfig(req.sigma)
        rows = sweep(nature, req.s_min, req.s_max, req.points, req.log_spaced)
        spacing = "log" if req.log_spaced else "linear"
        comments = [
            "risk ratio of the joint rule over the y-only rule, two-source Gaussian model",
            f"parameters: sigma={fmt_sig(req.sigma)} s-min={fmt_sig(req.s_min)} "
            f"s-max={fmt_sig(req.s_max)} points={req.points} spacing={spacing}",
        ]
        mc_ratio = None
        if req.with_mc:
            grid = s_grid(req.s_min, req.s_max, req.points, req.log_spaced)
            indices = _overlay_indices(req.points)
            mc_rows = simulate_sweep(
                nature, [grid[i] for i in indices], req.n, req.seed, req.workers
            )
            mc_ratio = {i: row.ratio for i, row in zip(indices, mc_rows)}
            comments.append(
                f"mc overlay: n={req.n} seed={req.seed} workers={req.workers}"
            )
        if fmt == "svg":
            return Response(
                content=figure_svg(rows, mc_ratio=mc_ratio, comments=comments),
                media_type="image/svg+xml",
            )
        return Response(
            content=sweep_csv(rows, mc_ratio=mc_ratio, comments=comments),
            media_type="text/csv; charset=utf-8",
        )

    return app


app = create_app()
