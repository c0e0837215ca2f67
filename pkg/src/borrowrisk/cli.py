"""Command-line front end: a thin client of the HTTP service.

Each invocation sends one request per output artifact. Without --server the
request is routed to an in-process instance of the FastAPI app over an ASGI
transport, so the tool works standalone; with --server it targets a running
instance. Rendering happens in the shared render module on the service side,
so outputs are byte-identical either way.

Exit codes: 0 success, 1 I/O or transport failure, 2 argument validation
failure.
"""

from __future__ import annotations

import argparse
import asyncio
import sys
from pathlib import Path

import httpx

from .render import fmt_sig

__all__ = ["main", "build_parser"]

EXIT_OK = 0
EXIT_IO = 1
EXIT_USAGE = 2

_UNREALIZABLE_HINT = (
    "warning: s < 1 corresponds to no realizable prior (implied prior variance < 0)"
)


def _post(path: str, payload: dict, params: dict | None, server: str | None) -> httpx.Response:
    async def _go() -> httpx.Response:
        if server is None:
            from .service.app import create_app

            transport = httpx.ASGITransport(app=create_app())
            async with httpx.AsyncClient(
                transport=transport, base_url="http://borrowrisk.internal", timeout=None
            ) as client:
                return await client.post(path, json=payload, params=params)
        async with httpx.AsyncClient(base_url=server, timeout=600.0) as client:
            return await client.post(path, json=payload, params=params)

    return asyncio.run(_go())


def _describe_validation(resp: httpx.Response) -> str:
    try:
        detail = resp.json().get("detail")
    except ValueError:
        return resp.text.strip()
    if isinstance(detail, list):
        parts = []
        for item in detail:
            loc = ".".join(str(piece) for piece in item.get("loc", []) if piece != "body")
            parts.append(f"{loc}: {item.get('msg', 'invalid')}" if loc else item.get("msg", ""))
        return "; ".join(parts)
    return str(detail)


def _reject(resp: httpx.Response) -> int:
    if resp.status_code in (400, 422):
        print(f"error: invalid arguments: {_describe_validation(resp)}", file=sys.stderr)
        return EXIT_USAGE
    print(f"error: service returned HTTP {resp.status_code}: {resp.text[:500]}", file=sys.stderr)
    return EXIT_IO


def _write_bytes(data: bytes, out: str) -> None:
    if out == "-":
        sys.stdout.write(data.decode("utf-8"))
        sys.stdout.flush()
    else:
        Path(out).write_bytes(data)


def _print_report(pairs: list[tuple[str, str]]) -> None:
    width = max(len(key) for key, _ in pairs)
    for key, value in pairs:
        print(f"{key.ljust(width)} = {value}")


def _cmd_risk(args: argparse.Namespace) -> int:
    resp = _post("/risk", {"s": args.s, "sigma": args.sigma}, None, args.server)
    if resp.status_code != 200:
        return _reject(resp)
    body = resp.json()
    if body.get("warning"):
        print(f"warning: {body['warning']}", file=sys.stderr)
    _print_report(
        [
            ("s", fmt_sig(body["s"])),
            ("sigma", fmt_sig(body["sigma"])),
            ("risk_marginal", fmt_sig(body["risk_marginal"])),
            ("risk_joint", fmt_sig(body["risk_joint"])),
            ("ratio", fmt_sig(body["ratio"])),
        ]
    )
    return EXIT_OK


def _cmd_simulate(args: argparse.Namespace) -> int:
    payload = {
        "kind": args.kind,
        "sigma": args.sigma,
        "n": args.n,
        "seed": args.seed,
        "workers": args.workers,
    }
    if args.s is not None:
        payload["s"] = args.s
    resp = _post("/simulate", payload, None, args.server)
    if resp.status_code != 200:
        return _reject(resp)
    body = resp.json()
    if body.get("warning"):
        print(f"warning: {body['warning']}", file=sys.stderr)
    _print_report(
        [
            ("kind", body["kind"]),
            ("s", "-" if body["s"] is None else fmt_sig(body["s"])),
            ("sigma", fmt_sig(body["sigma"])),
            ("n", str(body["n"])),
            ("seed", str(body["seed"])),
            ("workers", str(body["workers"])),
            ("estimate", fmt_sig(body["estimate"])),
            ("std_error", fmt_sig(body["std_error"])),
            ("reference", fmt_sig(body["reference"])),
            ("z_score", fmt_sig(body["z_score"])),
        ]
    )
    return EXIT_OK


def _cmd_sweep(args: argparse.Namespace) -> int:
    payload = {
        "sigma": args.sigma,
        "s_min": args.s_min,
        "s_max": args.s_max,
        "points": args.points,
        "log_spaced": args.log,
    }
    resp = _post("/sweep", payload, {"format": "csv"}, args.server)
    if resp.status_code != 200:
        return _reject(resp)
    if args.s_min < 1.0:
        print(_UNREALIZABLE_HINT, file=sys.stderr)
    _write_bytes(resp.content, args.out)
    return EXIT_OK


def _figure_format(out: str, override: str | None) -> str:
    if override is not None:
        return override
    if out != "-" and out.lower().endswith(".svg"):
        return "svg"
    return "csv"


def _cmd_figure(args: argparse.Namespace) -> int:
    payload = {
        "sigma": args.sigma,
        "s_min": args.s_min,
        "s_max": args.s_max,
        "points": args.points,
        "log_spaced": args.log,
        "with_mc": args.with_mc,
        "n": args.n,
        "seed": args.seed,
        "workers": args.workers,
    }
    targets = args.out if args.out else ["-"]
    formats = {_figure_format(out, args.format) for out in targets}
    rendered: dict[str, bytes] = {}
    for fmt in sorted(formats):
        resp = _post("/figure", payload, {"format": fmt}, args.server)
        if resp.status_code != 200:
            return _reject(resp)
        rendered[fmt] = resp.content
    if args.s_min < 1.0:
        print(_UNREALIZABLE_HINT, file=sys.stderr)
    for out in targets:
        _write_bytes(rendered[_figure_format(out, args.format)], out)
    return EXIT_OK


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    uvicorn.run("borrowrisk.service.app:app", host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="borrowrisk",
        description=(
            "Risk of borrowing a side datum through a joint Gaussian likelihood: "
            "closed forms, Monte Carlo checks, sweeps, and the risk-ratio figure."
        ),
    )
    parser.add_argument(
        "--server",
        metavar="URL",
        default=None,
        help="base URL of a running service (default: run the app in-process)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_risk = sub.add_parser("risk", help="closed-form risks and their ratio at one (s, sigma)")
    p_risk.add_argument("--s", type=float, required=True, help="analyst scale, > 0")
    p_risk.add_argument("--sigma", type=float, required=True, help="nature's scale, >= 1")
    p_risk.set_defaults(handler=_cmd_risk)

    p_sim = sub.add_parser("simulate", help="Monte Carlo risk estimate vs its closed form")
    p_sim.add_argument("--kind", choices=["marginal", "joint"], required=True)
    p_sim.add_argument("--s", type=float, default=None, help="analyst scale (joint kind only)")
    p_sim.add_argument("--sigma", type=float, required=True)
    p_sim.add_argument("--n", type=int, default=100_000, help="number of simulated worlds")
    p_sim.add_argument("--seed", type=int, default=0)
    p_sim.add_argument("--workers", type=int, default=1)
    p_sim.set_defaults(handler=_cmd_simulate)

    p_sweep = sub.add_parser("sweep", help="risk-ratio curve over s as CSV")
    p_sweep.add_argument("--sigma", type=float, required=True)
    p_sweep.add_argument("--s-min", dest="s_min", type=float, required=True)
    p_sweep.add_argument("--s-max", dest="s_max", type=float, required=True)
    p_sweep.add_argument("--points", type=int, required=True)
    p_sweep.add_argument("--log", dest="log", action="store_true", help="log-spaced grid (default)")
    p_sweep.add_argument("--linear", dest="log", action="store_false", help="linearly spaced grid")
    p_sweep.set_defaults(log=True)
    p_sweep.add_argument("--out", default="-", help="output path, or - for stdout (default)")
    p_sweep.set_defaults(handler=_cmd_sweep)

    p_fig = sub.add_parser(
        "figure",
        help="risk-ratio figure as CSV and/or SVG, optional Monte Carlo overlay",
    )
    p_fig.add_argument("--sigma", type=float, default=3.0)
    p_fig.add_argument("--s-min", dest="s_min", type=float, default=1.0)
    p_fig.add_argument("--s-max", dest="s_max", type=float, default=100.0)
    p_fig.add_argument("--points", type=int, default=200)
    p_fig.add_argument("--log", dest="log", action="store_true", help="log-spaced grid (default)")
    p_fig.add_argument("--linear", dest="log", action="store_false", help="linearly spaced grid")
    p_fig.set_defaults(log=True)
    p_fig.add_argument(
        "--out",
        action="append",
        default=None,
        help="output path (.svg selects SVG), or -; repeatable for CSV and SVG together",
    )
    p_fig.add_argument(
        "--format",
        choices=["csv", "svg"],
        default=None,
        help="force the output format regardless of extension (mainly for stdout)",
    )
    p_fig.add_argument("--with-mc", dest="with_mc", action="store_true",
                       help="overlay Monte Carlo ratio points at 10 grid indices")
    p_fig.add_argument("--n", type=int, default=100_000, help="worlds per overlay point")
    p_fig.add_argument("--seed", type=int, default=0)
    p_fig.add_argument("--workers", type=int, default=1)
    p_fig.set_defaults(handler=_cmd_figure)

    p_serve = sub.add_parser("serve", help="run the HTTP service under uvicorn")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.set_defaults(handler=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except httpx.HTTPError as exc:
        print(f"error: request failed: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
