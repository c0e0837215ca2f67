"""Deterministic text artifacts: CSV tables and a minimal self-contained SVG.

All numeric cells are rounded to 10 significant digits and lines end in LF,
so identical inputs give byte-identical output (golden-file friendly). The
SVG is hand-rolled (one curve, axes, a reference line) and embeds no
external resources.
"""

from __future__ import annotations

import math
from collections.abc import Mapping, Sequence

from .risk import SweepRow

__all__ = ["CSV_HEADER", "fmt_sig", "sweep_csv", "figure_svg"]

CSV_HEADER = "s,risk_joint,risk_marginal,ratio"

_SVG_WIDTH = 760
_SVG_HEIGHT = 480
_MARGIN_LEFT = 72
_MARGIN_RIGHT = 24
_MARGIN_TOP = 24
_MARGIN_BOTTOM = 56


def fmt_sig(value: float) -> str:
    """Format to 10 significant digits (plain decimal at desk scales)."""
    return format(float(value), ".10g")


def sweep_csv(
    rows: Sequence[SweepRow],
    mc_ratio: Mapping[int, float] | None = None,
    comments: Sequence[str] = (),
) -> str:
    """CSV for a sweep; `mc_ratio` maps row indices to overlay values.

    When mc_ratio is given the table gains an mc_ratio column, blank for rows
    without an overlay point. Comment lines (if any) precede the header,
    prefixed with '# '.
    """
    header = CSV_HEADER + (",mc_ratio" if mc_ratio is not None else "")
    lines = [f"# {comment}" for comment in comments]
    lines.append(header)
    for i, row in enumerate(rows):
        cells = [
            fmt_sig(row.s),
            fmt_sig(row.risk_joint),
            fmt_sig(row.risk_marginal),
            fmt_sig(row.ratio),
        ]
        if mc_ratio is not None:
            cells.append(fmt_sig(mc_ratio[i]) if i in mc_ratio else "")
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def _nice_step(span: float) -> float:
    raw = span / 5.0
    magnitude = 10.0 ** math.floor(math.log10(raw))
    for multiple in (1.0, 2.0, 2.5, 5.0, 10.0):
        if raw <= multiple * magnitude:
            return multiple * magnitude
    return 10.0 * magnitude


def _escape(text: str) -> str:
    return (
        text.replace("&", "&amp;")
        .replace("<", "&lt;")
        .replace(">", "&gt;")
        .replace('"', "&quot;")
    )


def figure_svg(
    rows: Sequence[SweepRow],
    mc_ratio: Mapping[int, float] | None = None,
    comments: Sequence[str] = (),
) -> str:
    """Self-contained SVG of the risk-ratio curve.

    Log-scaled s axis, linear ratio axis, a dashed reference line at
    ratio = 1, and circles for any Monte Carlo overlay points.
    """
    if len(rows) < 2:
        raise ValueError("need at least 2 rows to draw a curve")

    left = _MARGIN_LEFT
    right = _SVG_WIDTH - _MARGIN_RIGHT
    top = _MARGIN_TOP
    bottom = _SVG_HEIGHT - _MARGIN_BOTTOM

    log_lo = math.log10(rows[0].s)
    log_hi = math.log10(rows[-1].s)
    log_span = max(log_hi - log_lo, 1e-12)

    ratios = [row.ratio for row in rows]
    if mc_ratio:
        ratios.extend(mc_ratio.values())
    y_lo = min(min(ratios), 1.0)
    y_hi = max(max(ratios), 1.0)
    pad = 0.05 * max(y_hi - y_lo, 1e-9)
    y_lo -= pad
    y_hi += pad

    def px(s: float) -> float:
        return left + (math.log10(s) - log_lo) / log_span * (right - left)

    def py(ratio: float) -> float:
        return bottom - (ratio - y_lo) / (y_hi - y_lo) * (bottom - top)

    parts: list[str] = []
    parts.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SVG_WIDTH}" '
        f'height="{_SVG_HEIGHT}" viewBox="0 0 {_SVG_WIDTH} {_SVG_HEIGHT}">'
    )
    for comment in comments:
        safe = comment.replace("--", "- -")
        parts.append(f"<!-- {safe} -->")
    parts.append('<rect width="100%" height="100%" fill="#ffffff"/>')

    # y ticks and grid
    step = _nice_step(y_hi - y_lo)
    tick = math.ceil(y_lo / step) * step
    while tick <= y_hi + 1e-12:
        y = py(tick)
        parts.append(
            f'<line x1="{left}" y1="{y:.2f}" x2="{right}" y2="{y:.2f}" '
            f'stroke="#dddddd" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{left - 8}" y="{y + 4:.2f}" text-anchor="end" '
            f'font-size="12" font-family="sans-serif">{tick:g}</text>'
        )
        tick += step

    # x ticks at powers of ten inside the range, else at the endpoints
    decades = range(math.ceil(log_lo - 1e-9), math.floor(log_hi + 1e-9) + 1)
    x_ticks = [10.0**k for k in decades]
    if len(x_ticks) < 2:
        x_ticks = [rows[0].s, rows[-1].s]
    for s in x_ticks:
        x = px(s)
        parts.append(
            f'<line x1="{x:.2f}" y1="{bottom}" x2="{x:.2f}" y2="{bottom + 5}" '
            f'stroke="#000000" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{x:.2f}" y="{bottom + 20}" text-anchor="middle" '
            f'font-size="12" font-family="sans-serif">{s:g}</text>'
        )

    # axes
    parts.append(
        f'<line x1="{left}" y1="{bottom}" x2="{right}" y2="{bottom}" '
        f'stroke="#000000" stroke-width="1.5"/>'
    )
    parts.append(
        f'<line x1="{left}" y1="{top}" x2="{left}" y2="{bottom}" '
        f'stroke="#000000" stroke-width="1.5"/>'
    )

    # reference line at ratio = 1 (always inside the padded range)
    y_ref = py(1.0)
    parts.append(
        f'<line id="ratio-one" x1="{left}" y1="{y_ref:.2f}" x2="{right}" '
        f'y2="{y_ref:.2f}" stroke="#888888" stroke-width="1" stroke-dasharray="5 4"/>'
    )

    points = " ".join(f"{px(row.s):.2f},{py(row.ratio):.2f}" for row in rows)
    parts.append(
        f'<polyline fill="none" stroke="#1f77b4" stroke-width="2" points="{points}"/>'
    )

    if mc_ratio:
        for i in sorted(mc_ratio):
            parts.append(
                f'<circle cx="{px(rows[i].s):.2f}" cy="{py(mc_ratio[i]):.2f}" '
                f'r="3.5" fill="#d62728"/>'
            )

    # axis labels
    parts.append(
        f'<text x="{(left + right) / 2:.2f}" y="{_SVG_HEIGHT - 16}" '
        f'text-anchor="middle" font-size="14" font-family="sans-serif">'
        f"{_escape('s')}</text>"
    )
    parts.append(
        f'<text x="18" y="{(top + bottom) / 2:.2f}" text-anchor="middle" '
        f'font-size="14" font-family="sans-serif" '
        f'transform="rotate(-90 18 {(top + bottom) / 2:.2f})">'
        f"{_escape('risk ratio')}</text>"
    )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
