"""Self-contained SVG grouped bar charts of benchmark summaries."""

from __future__ import annotations

import math
import os
from typing import Sequence
from xml.sax.saxutils import escape

from .bench import OPTIMIZER_NAMES, SummaryRow, fmt_float
from .exceptions import ArgumentError

METRICS = {
    "r_minus_1": ("mean_R_minus_1", "R - 1 (lower is more accurate)"),
    "wall_time": ("mean_wall_time_s", "Wall time per run (s)"),
}
PALETTE = ("#4c72b0", "#dd8452", "#55a868", "#c44e52", "#8172b3", "#937860", "#da8bc3")

WIDTH, HEIGHT = 760, 420
MARGIN_L, MARGIN_R, MARGIN_T, MARGIN_B = 70, 150, 40, 50


def _nice_max(v: float) -> float:
    if v <= 0 or not math.isfinite(v):
        return 1.0
    mag = 10 ** math.floor(math.log10(v))
    for step in (1, 2, 2.5, 5, 10):
        if step * mag >= v:
            return step * mag
    return 10 * mag


def render_svg(summary: Sequence[SummaryRow], metric: str) -> str:
    """Grouped bar chart: one group per n, one ``rect.bar`` per optimizer."""
    if metric not in METRICS:
        raise ArgumentError(f"metric must be one of {sorted(METRICS)}")
    if not summary:
        raise ArgumentError("summary is empty")
    attr, ylabel = METRICS[metric]
    order = {name: k for k, name in enumerate(OPTIMIZER_NAMES)}
    optimizers = sorted({r.optimizer for r in summary}, key=lambda o: (order.get(o, 99), o))
    sizes = sorted({r.n for r in summary})
    if not optimizers:
        raise ArgumentError("no optimizers to plot")
    values = {(r.optimizer, r.n): getattr(r, attr) for r in summary}
    finite = [v for v in values.values() if math.isfinite(v)]
    ymax = _nice_max(max(finite, default=0.0))

    plot_w = WIDTH - MARGIN_L - MARGIN_R
    plot_h = HEIGHT - MARGIN_T - MARGIN_B
    group_w = plot_w / len(sizes)
    bar_w = group_w * 0.8 / len(optimizers)

    def y_of(v: float) -> float:
        return MARGIN_T + plot_h * (1 - v / ymax)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="11">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
    ]
    for k in range(6):
        v = ymax * k / 5
        y = y_of(v)
        out.append(
            f'<line x1="{MARGIN_L}" y1="{y:.2f}" x2="{MARGIN_L + plot_w}" y2="{y:.2f}" '
            'stroke="#dddddd"/>'
        )
        out.append(
            f'<text x="{MARGIN_L - 6}" y="{y + 4:.2f}" text-anchor="end">{fmt_float(v)}</text>'
        )
    out.append(
        f'<text x="16" y="{MARGIN_T + plot_h / 2:.2f}" text-anchor="middle" '
        f'transform="rotate(-90 16 {MARGIN_T + plot_h / 2:.2f})">{escape(ylabel)}</text>'
    )

    for g, n in enumerate(sizes):
        x0 = MARGIN_L + g * group_w + group_w * 0.1
        for b, opt in enumerate(optimizers):
            v = values.get((opt, n))
            if v is None or not math.isfinite(v):
                continue
            x = x0 + b * bar_w
            y = y_of(v)
            out.append(
                f'<rect class="bar" data-optimizer="{escape(opt)}" data-n="{n}" '
                f'x="{x:.2f}" y="{y:.2f}" width="{bar_w * 0.9:.2f}" '
                f'height="{MARGIN_T + plot_h - y:.2f}" '
                f'fill="{PALETTE[b % len(PALETTE)]}"><title>{escape(opt)} n={n}: '
                f"{fmt_float(v)}</title></rect>"
            )
            out.append(
                f'<text x="{x + bar_w * 0.45:.2f}" y="{y - 3:.2f}" text-anchor="middle" '
                f'font-size="8">{v:.3g}</text>'
            )
        out.append(
            f'<text x="{MARGIN_L + (g + 0.5) * group_w:.2f}" y="{HEIGHT - MARGIN_B + 18}" '
            f'text-anchor="middle">n = {n}</text>'
        )
    out.append(
        f'<line x1="{MARGIN_L}" y1="{MARGIN_T + plot_h}" x2="{MARGIN_L + plot_w}" '
        f'y2="{MARGIN_T + plot_h}" stroke="black"/>'
    )
    out.append(
        f'<line x1="{MARGIN_L}" y1="{MARGIN_T}" x2="{MARGIN_L}" '
        f'y2="{MARGIN_T + plot_h}" stroke="black"/>'
    )
    for b, opt in enumerate(optimizers):
        y = MARGIN_T + 10 + 18 * b
        lx = WIDTH - MARGIN_R + 16
        out.append(
            f'<rect class="legend" x="{lx}" y="{y - 9}" width="12" height="12" '
            f'fill="{PALETTE[b % len(PALETTE)]}"/>'
        )
        out.append(f'<text x="{lx + 18}" y="{y + 1}">{escape(opt)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def emit_plot(summary: Sequence[SummaryRow], metric: str, out: str | os.PathLike) -> str:
    """Render and write the chart; returns the SVG text."""
    svg = render_svg(summary, metric)
    with open(out, "w", encoding="utf-8") as fh:
        fh.write(svg)
    return svg
