"""Self-contained SVG figures: cluster arc panels and the scree plot.

SVG is generated directly (no plotting backend) so output is byte
deterministic and free of external references. Arc panels show the
cluster mean as a solid line, the +/- 1 SD band as dotted red lines, and
the 99% CI as blue lines, with a fixed y-range of [-1.5, 1.5].
"""

from __future__ import annotations

import numpy as np

from .clustering import ClusterSummary, suggest_elbow
from .errors import ParameterError

VERSION_COMMENT = "<!-- arc-miner figure v1 -->"

PANEL_W, PANEL_H = 320, 240
MARGIN = {"left": 42, "right": 12, "top": 30, "bottom": 30}


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _polyline(xs, ys, stroke, width="1.5", dash=None) -> str:
    pts = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in zip(xs, ys))
    dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
    return (
        f'<polyline points="{pts}" fill="none" stroke="{stroke}" '
        f'stroke-width="{width}"{dash_attr}/>'
    )


def _escape(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def _panel(summary: ClusterSummary, ox: float, oy: float) -> list[str]:
    m = len(summary.mean)
    x0, x1 = ox + MARGIN["left"], ox + PANEL_W - MARGIN["right"]
    y0, y1 = oy + MARGIN["top"], oy + PANEL_H - MARGIN["bottom"]
    ymin, ymax = -1.5, 1.5

    def sx(i):
        return x0 + (x1 - x0) * (i / max(m - 1, 1))

    def sy(v):
        v = min(max(v, ymin), ymax)
        return y1 - (y1 - y0) * (v - ymin) / (ymax - ymin)

    xs = [sx(i) for i in range(m)]
    parts = [
        f'<rect x="{_fmt(x0)}" y="{_fmt(y0)}" width="{_fmt(x1 - x0)}" '
        f'height="{_fmt(y1 - y0)}" fill="white" stroke="#888" stroke-width="1"/>',
        _polyline([x0, x1], [sy(0), sy(0)], "#cccccc", width="1"),
        _polyline(xs, [sy(v) for v in summary.ci_low], "#2b6cb0", width="1"),
        _polyline(xs, [sy(v) for v in summary.ci_high], "#2b6cb0", width="1"),
        _polyline(xs, [sy(v) for v in summary.mean - summary.sd], "#c53030",
                  width="1", dash="2 3"),
        _polyline(xs, [sy(v) for v in summary.mean + summary.sd], "#c53030",
                  width="1", dash="2 3"),
        _polyline(xs, [sy(v) for v in summary.mean], "#111111", width="2"),
        f'<text x="{_fmt(ox + PANEL_W / 2)}" y="{_fmt(oy + 18)}" '
        f'text-anchor="middle" font-family="sans-serif" font-size="12">'
        f"cluster {summary.cluster_id + 1} (n={summary.n}): "
        f"{_escape(summary.label)}</text>",
    ]
    for frac, tick in ((0.0, "1"), (0.5, "50"), (1.0, "100")):
        tx = x0 + (x1 - x0) * frac
        parts.append(
            f'<text x="{_fmt(tx)}" y="{_fmt(y1 + 16)}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="10">{tick}</text>'
        )
    for v in (-1.0, 0.0, 1.0):
        parts.append(
            f'<text x="{_fmt(x0 - 6)}" y="{_fmt(sy(v) + 3)}" text-anchor="end" '
            f'font-family="sans-serif" font-size="10">{v:g}</text>'
        )
    return parts


def render_arcs(summaries: list[ClusterSummary], columns: int = 4) -> str:
    """One panel per cluster, in cluster-id reading order."""
    if not summaries:
        raise ParameterError("no cluster summaries to render")
    ordered = sorted(summaries, key=lambda s: s.cluster_id)
    n = len(ordered)
    cols = min(columns, n)
    rows = (n + cols - 1) // cols
    width, height = cols * PANEL_W, rows * PANEL_H
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        VERSION_COMMENT,
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]
    for i, summary in enumerate(ordered):
        parts.extend(_panel(summary, (i % cols) * PANEL_W, (i // cols) * PANEL_H))
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def render_scree(points: list[tuple[int, float]]) -> str:
    """WSS against k with markers; the advisory elbow is annotated."""
    if not points:
        raise ParameterError("no scree points to render")
    width, height = 480, 320
    x0, x1 = 50, width - 15
    y0, y1 = 25, height - 40
    ks = [k for k, _ in points]
    ws = [w for _, w in points]
    kmin, kmax = min(ks), max(ks)
    wmax = max(ws) or 1.0

    def sx(k):
        return x0 + (x1 - x0) * ((k - kmin) / max(kmax - kmin, 1))

    def sy(w):
        return y1 - (y1 - y0) * (w / wmax)

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        VERSION_COMMENT,
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<rect x="{x0}" y="{y0}" width="{x1 - x0}" height="{y1 - y0}" '
        'fill="white" stroke="#888" stroke-width="1"/>',
        _polyline([sx(k) for k in ks], [sy(w) for w in ws], "#111111"),
    ]
    for k, w in points:
        parts.append(
            f'<circle cx="{_fmt(sx(k))}" cy="{_fmt(sy(w))}" r="3" fill="#111111"/>'
        )
    elbow = suggest_elbow(points)
    if elbow is not None:
        ew = dict(points)[elbow]
        parts.append(
            f'<circle cx="{_fmt(sx(elbow))}" cy="{_fmt(sy(ew))}" r="6" '
            'fill="none" stroke="#c53030" stroke-width="2"/>'
        )
        parts.append(
            f'<text x="{_fmt(sx(elbow) + 8)}" y="{_fmt(sy(ew) - 8)}" '
            f'font-family="sans-serif" font-size="11" fill="#c53030">'
            f"elbow k={elbow}</text>"
        )
    parts.append(
        f'<text x="{_fmt((x0 + x1) / 2)}" y="{height - 10}" text-anchor="middle" '
        'font-family="sans-serif" font-size="12">k</text>'
    )
    parts.append(
        f'<text x="14" y="{_fmt((y0 + y1) / 2)}" text-anchor="middle" '
        f'font-family="sans-serif" font-size="12" '
        f'transform="rotate(-90 14 {_fmt((y0 + y1) / 2)})">WSS</text>'
    )
    for k in ks:
        parts.append(
            f'<text x="{_fmt(sx(k))}" y="{y1 + 16}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="9">{k}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
