"""SVG diagrams of tonnetz embeddings.

Styling constants are fixed so that output stays byte-stable:

============  ============================================
element       style
============  ============================================
lattice       light grey nodes and edges, dashed edges
0-7 axis      dark horizontal line through every v = 0 point
placed edge   solid 3px dark blue line
placed note   filled blue circle, white label
============  ============================================
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional
from xml.sax.saxutils import escape

from .swara import format_swara
from .tonnetz import LatticePoint, are_adjacent, euclidean_position, pitch_class_at

NOTE_RADIUS = 0.24  # in units of scale
LATTICE_RADIUS = 0.12
NOTE_FILL = "#2b6cb0"
NOTE_TEXT = "#ffffff"
PLACED_EDGE = "#1a365d"
LATTICE_STROKE = "#cbd5e0"
LATTICE_TEXT = "#a0aec0"
AXIS_STROKE = "#2d3748"


class LabelMode(Enum):
    SWARA = "swara"
    PITCH_CLASS = "pitch-class"


@dataclass(frozen=True)
class RenderOptions:
    scale: float = 60.0
    margin: float = 40.0
    show_background: bool = True
    label_mode: LabelMode = LabelMode.SWARA

    def __post_init__(self):
        if not self.scale > 0:
            raise ValueError(f"scale must be positive, got {self.scale}")
        if self.margin < 0:
            raise ValueError(f"margin must be non-negative, got {self.margin}")


def _num(x: float) -> str:
    s = f"{x:.2f}"
    return "0.00" if s == "-0.00" else s


def _label(pc: int, mode: LabelMode) -> str:
    return format_swara(pc) if mode is LabelMode.SWARA else str(pc)


class _Frame:
    """Maps lattice points to screen coordinates."""

    def __init__(self, points, opts: RenderOptions):
        us = [p[0] for p in points]
        vs = [p[1] for p in points]
        self.u_range = range(min(us) - 1, max(us) + 2)
        self.v_range = range(min(vs) - 1, max(vs) + 2)
        corners = [euclidean_position((u, v)) for u in self.u_range for v in self.v_range]
        self.x0 = min(c.x for c in corners)
        self.y1 = max(c.y for c in corners)
        self.width = (max(c.x for c in corners) - self.x0) * opts.scale + 2 * opts.margin
        self.height = (self.y1 - min(c.y for c in corners)) * opts.scale + 2 * opts.margin
        self.opts = opts

    def screen(self, p) -> tuple[float, float]:
        e = euclidean_position(p)
        s, m = self.opts.scale, self.opts.margin
        return (e.x - self.x0) * s + m, (self.y1 - e.y) * s + m

    def lattice(self):
        return [LatticePoint(u, v) for u in self.u_range for v in self.v_range]


def render_tonnetz_svg(embedding, opts: Optional[RenderOptions] = None, title: Optional[str] = None) -> str:
    """Standalone SVG of an embedding on its surrounding lattice patch."""
    opts = opts or RenderOptions()
    items = list(embedding.items)
    frame = _Frame([p for _, p in items], opts)
    r_note = NOTE_RADIUS * opts.scale
    r_lat = LATTICE_RADIUS * opts.scale
    font = 0.22 * opts.scale

    body: list[str] = []
    if title:
        body.append(f"  <title>{escape(title)}</title>")

    if opts.show_background:
        body.append('  <g class="lattice">')
        grid = frame.lattice()
        for i, a in enumerate(grid):
            for b in grid[i + 1 :]:
                if are_adjacent(a, b):
                    (x1, y1), (x2, y2) = frame.screen(a), frame.screen(b)
                    body.append(
                        f'    <line class="lattice-edge" x1="{_num(x1)}" y1="{_num(y1)}" '
                        f'x2="{_num(x2)}" y2="{_num(y2)}" stroke="{LATTICE_STROKE}" '
                        f'stroke-width="1" stroke-dasharray="4 3"/>'
                    )
        placed = {p for _, p in items}
        for p in grid:
            if p in placed:
                continue
            x, y = frame.screen(p)
            body.append(
                f'    <circle class="lattice-node" cx="{_num(x)}" cy="{_num(y)}" r="{_num(r_lat)}" '
                f'fill="#ffffff" stroke="{LATTICE_STROKE}"/>'
            )
            body.append(
                f'    <text class="lattice-label" x="{_num(x)}" y="{_num(y - r_lat - 2)}" '
                f'font-size="{_num(font * 0.7)}" text-anchor="middle" fill="{LATTICE_TEXT}">'
                f"{escape(_label(pitch_class_at(p), opts.label_mode))}</text>"
            )
        body.append("  </g>")

    _, axis_y = frame.screen((0, 0))
    body.append(
        f'  <line class="axis" x1="0.00" y1="{_num(axis_y)}" x2="{_num(frame.width)}" '
        f'y2="{_num(axis_y)}" stroke="{AXIS_STROKE}" stroke-width="2"/>'
    )

    body.append('  <g class="placed-edges">')
    for i, (_, a) in enumerate(items):
        for _, b in items[i + 1 :]:
            if are_adjacent(a, b):
                (x1, y1), (x2, y2) = frame.screen(a), frame.screen(b)
                body.append(
                    f'    <line class="placed-edge" x1="{_num(x1)}" y1="{_num(y1)}" '
                    f'x2="{_num(x2)}" y2="{_num(y2)}" stroke="{PLACED_EDGE}" stroke-width="3"/>'
                )
    body.append("  </g>")

    body.append('  <g class="notes">')
    for pc, p in items:
        x, y = frame.screen(p)
        body.append(
            f'    <circle class="note" data-pc="{pc}" data-u="{p[0]}" data-v="{p[1]}" '
            f'cx="{_num(x)}" cy="{_num(y)}" r="{_num(r_note)}" fill="{NOTE_FILL}"/>'
        )
        body.append(
            f'    <text class="note-label" x="{_num(x)}" y="{_num(y + font * 0.35)}" '
            f'font-size="{_num(font)}" text-anchor="middle" fill="{NOTE_TEXT}">'
            f"{escape(_label(pc, opts.label_mode))}</text>"
        )
    body.append("  </g>")

    # Circles and lattice labels may reach past a small margin.
    reach = max(r_note, r_lat + 2 + font * 0.7) if opts.show_background else r_note
    pad = max(0.0, reach - opts.margin)
    view = (-pad, -pad, frame.width + 2 * pad, frame.height + 2 * pad)
    head = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_num(view[2])}" height="{_num(view[3])}" '
        f'viewBox="{" ".join(_num(v) for v in view)}" font-family="sans-serif">'
    )
    return "\n".join([head, *body, "</svg>"]) + "\n"
