"""Standalone SVG emission for cost-versus-noise curves, log-log axes."""

from __future__ import annotations

import math
from pathlib import Path

WIDTH, HEIGHT = 760, 520
MARGIN_L, MARGIN_R, MARGIN_T, MARGIN_B = 70, 30, 30, 55

COLORS = {
    "pivot": "#d62728",
    "atom": "#1f77b4",
    "atom_pivot": "#2ca02c",
    "planted": "#7f7f7f",
}
FALLBACK_COLORS = ["#9467bd", "#8c564b", "#e377c2", "#bcbd22", "#17becf"]


def _color(name: str, index: int) -> str:
    return COLORS.get(name, FALLBACK_COLORS[index % len(FALLBACK_COLORS)])


def _decades(lo: float, hi: float):
    start = math.floor(math.log10(lo))
    stop = math.ceil(math.log10(hi))
    return [10.0**e for e in range(start, stop + 1) if lo <= 10.0**e <= hi]


class _LogAxis:
    def __init__(self, lo: float, hi: float, pix_lo: float, pix_hi: float):
        if lo <= 0 or hi <= 0:
            raise ValueError("log axis needs positive bounds")
        if lo == hi:
            lo, hi = lo / 2, hi * 2
        self.lo, self.hi = lo, hi
        self.pix_lo, self.pix_hi = pix_lo, pix_hi

    def __call__(self, value: float) -> float:
        frac = (math.log10(value) - math.log10(self.lo)) / (
            math.log10(self.hi) - math.log10(self.lo)
        )
        return self.pix_lo + frac * (self.pix_hi - self.pix_lo)


def _fmt(value: float) -> str:
    exp = math.log10(value)
    if exp == int(exp):
        return f"1e{int(exp)}" if abs(exp) > 3 else f"{value:g}"
    return f"{value:g}"


def emit_plot(series: dict[str, list[tuple[float, float]]], path, title: str = "") -> None:
    """Write one polyline per series over shared log-log axes.

    `series` maps a name to (x, y) points; y values of zero are clamped to
    the smallest positive y in the data so they stay on the canvas.
    """
    if not series or all(not pts for pts in series.values()):
        raise ValueError("nothing to plot")
    xs = [x for pts in series.values() for x, _ in pts]
    ys = [y for pts in series.values() for _, y in pts if y > 0]
    if not ys:
        ys = [1.0]
    y_floor = min(ys)
    x_axis = _LogAxis(min(xs), max(xs), MARGIN_L, WIDTH - MARGIN_R)
    y_axis = _LogAxis(y_floor, max(ys), HEIGHT - MARGIN_B, MARGIN_T)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<line x1="{MARGIN_L}" y1="{HEIGHT - MARGIN_B}" x2="{WIDTH - MARGIN_R}" '
        f'y2="{HEIGHT - MARGIN_B}" stroke="black"/>',
        f'<line x1="{MARGIN_L}" y1="{MARGIN_T}" x2="{MARGIN_L}" '
        f'y2="{HEIGHT - MARGIN_B}" stroke="black"/>',
    ]
    if title:
        parts.append(
            f'<text x="{WIDTH / 2:.1f}" y="20" text-anchor="middle" '
            f'font-size="14">{title}</text>'
        )

    for tick in _decades(x_axis.lo, x_axis.hi):
        px = x_axis(tick)
        parts.append(
            f'<line x1="{px:.1f}" y1="{HEIGHT - MARGIN_B}" x2="{px:.1f}" '
            f'y2="{HEIGHT - MARGIN_B + 5}" stroke="black"/>'
        )
        parts.append(
            f'<text x="{px:.1f}" y="{HEIGHT - MARGIN_B + 18}" text-anchor="middle" '
            f'font-size="11">{_fmt(tick)}</text>'
        )
    for tick in _decades(y_axis.lo, y_axis.hi):
        py = y_axis(tick)
        parts.append(
            f'<line x1="{MARGIN_L - 5}" y1="{py:.1f}" x2="{MARGIN_L}" '
            f'y2="{py:.1f}" stroke="black"/>'
        )
        parts.append(
            f'<text x="{MARGIN_L - 8}" y="{py + 4:.1f}" text-anchor="end" '
            f'font-size="11">{_fmt(tick)}</text>'
        )
    parts.append(
        f'<text x="{(MARGIN_L + WIDTH - MARGIN_R) / 2:.1f}" y="{HEIGHT - 12}" '
        f'text-anchor="middle" font-size="12">noise probability</text>'
    )
    parts.append(
        f'<text x="16" y="{(MARGIN_T + HEIGHT - MARGIN_B) / 2:.1f}" '
        f'text-anchor="middle" font-size="12" '
        f'transform="rotate(-90 16 {(MARGIN_T + HEIGHT - MARGIN_B) / 2:.1f})">cost</text>'
    )

    legend_y = MARGIN_T + 8
    for idx, (name, points) in enumerate(sorted(series.items())):
        if not points:
            continue
        color = _color(name, idx)
        coords = " ".join(
            f"{x_axis(x):.2f},{y_axis(max(y, y_floor)):.2f}" for x, y in points
        )
        parts.append(
            f'<polyline fill="none" stroke="{color}" stroke-width="1.6" '
            f'points="{coords}"/>'
        )
        parts.append(
            f'<line x1="{MARGIN_L + 12}" y1="{legend_y}" x2="{MARGIN_L + 36}" '
            f'y2="{legend_y}" stroke="{color}" stroke-width="2"/>'
        )
        parts.append(
            f'<text x="{MARGIN_L + 42}" y="{legend_y + 4}" font-size="12">{name}</text>'
        )
        legend_y += 18

    parts.append("</svg>")
    Path(path).write_text("\n".join(parts) + "\n")
