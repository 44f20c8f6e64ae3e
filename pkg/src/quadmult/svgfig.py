"""Static SVG figures: the ring lattice, the half-plane disks and triples,
and the picture under inversion z -> 1/z.

Output is hand-emitted SVG 1.1, deterministic for fixed inputs.
"""

from __future__ import annotations

from fractions import Fraction

from .classify import enumerate_unit_fraction_triples
from .quadfield import Discriminant, enum_norm_le

_COLORS = ("#d62728", "#1f77b4", "#2ca02c")

_PANEL = 400.0
_GAP = 40.0
_PAD_FRACTION = 0.1


class _Panel:
    """Maps world coordinates into a pixel square, preserving aspect."""

    def __init__(self, x0, x1, y0, y1, px_off):
        pad_x = (x1 - x0) * _PAD_FRACTION
        pad_y = (y1 - y0) * _PAD_FRACTION
        self.x0, self.x1 = x0 - pad_x, x1 + pad_x
        self.y0, self.y1 = y0 - pad_y, y1 + pad_y
        self.px_off = px_off
        self.scale = _PANEL / max(self.x1 - self.x0, self.y1 - self.y0)

    def px(self, x, y):
        cx = (self.x0 + self.x1) / 2
        cy = (self.y0 + self.y1) / 2
        return (
            self.px_off + _PANEL / 2 + (x - cx) * self.scale,
            _PANEL / 2 - (y - cy) * self.scale,
        )

    def contains(self, x, y):
        return self.x0 <= x <= self.x1 and self.y0 <= y <= self.y1


def _fmt(v: float) -> str:
    return f"{v:.4f}"


def render_figure(disc: Discriminant, highlight: int = 3) -> str:
    """Two panels: the lattice with both inverted-half-plane disks, and the
    image of everything under z -> 1/z with the Re = 1/3, 1/4 lines."""
    triples = enumerate_unit_fraction_triples(disc)[:highlight]

    left = _Panel(-1.0, 4.5, -2.5, 2.5, 0.0)
    right = _Panel(-1.1, 1.1, -1.1, 1.1, _PANEL + _GAP)

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="0 0 {_fmt(2 * _PANEL + _GAP)} {_fmt(_PANEL)}">',
        f'<rect x="0" y="0" width="{_fmt(2 * _PANEL + _GAP)}" '
        f'height="{_fmt(_PANEL)}" fill="#ffffff"/>',
    ]

    def circle(panel, x, y, r_world, stroke, fill="none", width=1.2):
        cx, cy = panel.px(x, y)
        parts.append(
            f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" '
            f'r="{_fmt(r_world * panel.scale)}" fill="{fill}" '
            f'stroke="{stroke}" stroke-width="{_fmt(width)}"/>'
        )

    def dot(panel, x, y, color, r_px=2.2):
        cx, cy = panel.px(x, y)
        parts.append(
            f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(r_px)}" '
            f'fill="{color}"/>'
        )

    def line(panel, x0, y0, x1, y1, color, width=1.0, dash=None):
        ax, ay = panel.px(x0, y0)
        bx, by = panel.px(x1, y1)
        extra = f' stroke-dasharray="{dash}"' if dash else ""
        parts.append(
            f'<line x1="{_fmt(ax)}" y1="{_fmt(ay)}" x2="{_fmt(bx)}" '
            f'y2="{_fmt(by)}" stroke="{color}" stroke-width="{_fmt(width)}"'
            f"{extra}/>"
        )

    # left panel: lattice, the two disks Re(1/z) >= 1/3 and >= 1/4
    lattice = enum_norm_le(disc, 36)
    for z in lattice:
        x, y = _to_xy(z)
        if left.contains(x, y):
            dot(left, x, y, "#555555", 1.6)
    circle(left, 1.5, 0.0, 1.5, "#d62728")
    circle(left, 2.0, 0.0, 2.0, "#1f77b4")
    line(left, left.x0, 0, left.x1, 0, "#bbbbbb", 0.6)
    line(left, 0, left.y0, 0, left.y1, "#bbbbbb", 0.6)

    # right panel: the inverted lattice, Re = 1/3 and 1/4 lines
    for z in lattice:
        x, y = _to_xy(z)
        n = x * x + y * y
        if n == 0:
            continue
        ix, iy = x / n, -y / n
        if right.contains(ix, iy):
            dot(right, ix, iy, "#555555", 1.6)
    line(right, 1 / 3, right.y0, 1 / 3, right.y1, "#d62728", 1.0, dash="4,3")
    line(right, 0.25, right.y0, 0.25, right.y1, "#1f77b4", 1.0, dash="4,3")
    line(right, right.x0, 0, right.x1, 0, "#bbbbbb", 0.6)
    line(right, 0, right.y0, 0, right.y1, "#bbbbbb", 0.6)

    # highlighted triples and their inverted triangles; the triangle
    # centroid always sits at 1/3
    for color, triple in zip(_COLORS, triples):
        pts = []
        for m in triple.mu:
            x, y = _to_xy(m)
            if left.contains(x, y):
                dot(left, x, y, color, 3.4)
            n = x * x + y * y
            pts.append((x / n, -y / n))
        poly = " ".join(
            f"{_fmt(px)},{_fmt(py)}"
            for px, py in (right.px(x, y) for x, y in pts)
        )
        parts.append(
            f'<polygon points="{poly}" fill="none" stroke="{color}" '
            f'stroke-width="1.2"/>'
        )
        for x, y in pts:
            dot(right, x, y, color, 3.0)
    dot(right, 1 / 3, 0.0, "#000000", 2.6)

    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _to_xy(z) -> tuple[float, float]:
    c = z.to_complex()
    return c.real, c.imag
