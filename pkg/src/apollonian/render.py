"""Deterministic SVG drawings of packings.

Geometry stays exact until serialization; every coordinate is printed at
12 significant digits (round-half-even).  The enclosing circle fills the
canvas with a 5% margin and the y axis points up in model space.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from xml.sax.saxutils import escape

from .frames import PAIRS, frame_of
from .numerics import decimal_str, rat_str
from .symbols import CircleSymbol, Packing, root_configs

LABEL_MODES = ("none", "bends", "symbols")
MARGIN = Fraction(105, 100)


class EmptyPacking(ValueError):
    pass


@dataclass(frozen=True)
class RenderOptions:
    width_px: int = 800
    label_mode: str = "none"
    draw_frame: bool = False
    min_radius_px: Fraction = Fraction(1, 2)

    def __post_init__(self):
        if self.width_px <= 0:
            raise ValueError(f"width_px must be positive, got {self.width_px}")
        if self.label_mode not in LABEL_MODES:
            raise ValueError(f"label_mode must be one of {LABEL_MODES}, got {self.label_mode!r}")
        if Fraction(self.min_radius_px) <= 0:
            raise ValueError("min_radius_px must be positive")


class _Canvas:
    def __init__(self, packing: Packing, width: int):
        self.width = width
        self.half = Fraction(width, 2)
        outer = packing.enclosing
        self.origin = outer.center
        # model radius 1/B maps to half the width shrunk by the margin
        self.scale = self.half / (MARGIN * outer.radius)

    def point(self, x: Fraction, y: Fraction) -> tuple[Fraction, Fraction]:
        return (
            self.half + self.scale * (x - self.origin[0]),
            self.half - self.scale * (y - self.origin[1]),
        )

    def circle(self, c: CircleSymbol) -> tuple[Fraction, Fraction, Fraction]:
        cx, cy = self.point(*c.center)
        return cx, cy, self.scale * c.radius


def render_svg(packing: Packing, opts: RenderOptions = RenderOptions()) -> str:
    if not packing.circles:
        raise EmptyPacking("nothing to render")
    canvas = _Canvas(packing, opts.width_px)
    min_r = Fraction(opts.min_radius_px)
    w = str(opts.width_px)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{w}" '
        f'viewBox="0 0 {w} {w}">',
        '<g id="circles" fill="none" stroke="black">',
    ]
    shown = []
    for c in packing.circles:
        cx, cy, r = canvas.circle(c)
        if c.bend > 0 and r < min_r:
            continue
        shown.append((c, cx, cy, r))
        width = "2" if c.bend < 0 else "1"
        out.append(
            f'<circle cx="{decimal_str(cx)}" cy="{decimal_str(cy)}" r="{decimal_str(r)}" '
            f'stroke-width="{width}"/>'
        )
    out.append("</g>")

    if opts.label_mode != "none":
        out.append(
            '<g id="labels" font-family="sans-serif" text-anchor="middle" '
            'dominant-baseline="central">'
        )
        for c, cx, cy, r in shown:
            if c.bend < 0:
                continue
            if opts.label_mode == "bends":
                text, size = str(c.bend), r * Fraction(4, 5)
            else:
                text = str(c)
                size = 2 * r / max(len(text), 1)
            out.append(
                f'<text x="{decimal_str(cx)}" y="{decimal_str(cy)}" '
                f'font-size="{decimal_str(size)}">{escape(text)}</text>'
            )
        out.append("</g>")

    if opts.draw_frame and packing.key.B > 0:
        out.extend(_frame_elements(packing, canvas))

    out.append("</svg>")
    return "\n".join(out) + "\n"


def _frame_elements(packing: Packing, canvas: _Canvas) -> list[str]:
    config = root_configs(packing.key)[0]
    frame = frame_of(config)
    size = decimal_str(Fraction(canvas.width, 60))
    out = ['<g id="frame" stroke="red" fill="red" font-family="sans-serif" text-anchor="middle">']
    for (i, j), t in zip(PAIRS, frame.triples):
        x1, y1 = canvas.point(*config[i].center)
        x2, y2 = canvas.point(*config[j].center)
        out.append(
            f'<line x1="{decimal_str(x1)}" y1="{decimal_str(y1)}" '
            f'x2="{decimal_str(x2)}" y2="{decimal_str(y2)}" stroke-width="1"/>'
        )
        label = f"{i}{j}: ({rat_str(t.delta)}, {rat_str(t.gamma)}, {t.h})"
        out.append(
            f'<text x="{decimal_str((x1 + x2) / 2)}" y="{decimal_str((y1 + y2) / 2)}" '
            f'font-size="{size}" stroke="none">{escape(label)}</text>'
        )
    out.append("</g>")
    return out
