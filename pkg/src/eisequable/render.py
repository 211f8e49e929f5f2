"""SVG drawing of the two equable triangles over the lattice dot grid.

Viewport transform
------------------
Content bounds ``[xmin, xmax] x [ymin, ymax]`` are taken over the triangle
vertices (cartesian, after translation) and padded by ``MARGIN`` world units.
A world point ``(x, y)`` maps to SVG user units by

    sx = SCALE * (x - (xmin - MARGIN))
    sy = SCALE * ((ymax + MARGIN) - y)

so the y axis points up as in the usual picture. The ``viewBox`` is
``0 0 SCALE*(xmax-xmin+2*MARGIN) SCALE*(ymax-ymin+2*MARGIN)``. Coordinates are
written with six decimals. The output depends only on the arguments.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .eisenstein import EisensteinInt, to_cartesian
from .triangle import LatticeTriangle

__all__ = [
    "MARGIN",
    "SCALE",
    "FigureTriangle",
    "Viewport",
    "figure_triangles",
    "render_svg",
    "write_svg",
]

SCALE = 40.0
MARGIN = 1.0
DEFAULT_RANGE = 24
EQUILATERAL_SHIFT = 5.0


@dataclass(frozen=True)
class FigureTriangle:
    name: str
    triangle: LatticeTriangle
    shift_x: float
    stroke: str
    fill: str

    def points(self) -> list[tuple[float, float]]:
        return [(x + self.shift_x, y) for x, y in (to_cartesian(v) for v in self.triangle.vertices)]


def figure_triangles() -> list[FigureTriangle]:
    """The scalene triangle at the origin and the equilateral one moved right by 5."""
    return [
        FigureTriangle(
            "scalene",
            LatticeTriangle(EisensteinInt(6, 3), EisensteinInt(8, 16)),
            0.0,
            "#d62728",
            "#f7d4d4",
        ),
        FigureTriangle(
            "equilateral",
            LatticeTriangle(EisensteinInt(8, 4), EisensteinInt(4, 8)),
            EQUILATERAL_SHIFT,
            "#1f4fb4",
            "#d2dcf0",
        ),
    ]


@dataclass(frozen=True)
class Viewport:
    xmin: float
    xmax: float
    ymin: float
    ymax: float
    scale: float = SCALE
    margin: float = MARGIN

    @classmethod
    def around(cls, points: Sequence[tuple[float, float]]) -> Viewport:
        xs = [p[0] for p in points]
        ys = [p[1] for p in points]
        return cls(min(xs), max(xs), min(ys), max(ys))

    @property
    def width(self) -> float:
        return self.scale * (self.xmax - self.xmin + 2 * self.margin)

    @property
    def height(self) -> float:
        return self.scale * (self.ymax - self.ymin + 2 * self.margin)

    def to_svg(self, x: float, y: float) -> tuple[float, float]:
        return (
            self.scale * (x - (self.xmin - self.margin)),
            self.scale * ((self.ymax + self.margin) - y),
        )

    def contains(self, x: float, y: float) -> bool:
        eps = 1e-9
        return (
            self.xmin - self.margin - eps <= x <= self.xmax + self.margin + eps
            and self.ymin - self.margin - eps <= y <= self.ymax + self.margin + eps
        )


def _f(v: float) -> str:
    s = f"{v:.6f}"
    return "0.000000" if s == "-0.000000" else s


def render_svg(grid: bool = True, coefficient_range: int = DEFAULT_RANGE) -> str:
    """Return the figure as an SVG 1.1 document.

    With ``grid`` the lattice points ``c1 + cw*w`` with ``|c1|, |cw| <=
    coefficient_range`` that fall inside the viewport are drawn as dots, and
    the coordinate axes are drawn through the origin.
    """
    if coefficient_range < 0:
        raise ValueError("coefficient_range must be non-negative")
    shapes = figure_triangles()
    view = Viewport.around([p for t in shapes for p in t.points()])
    lines = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_f(view.width)}" height="{_f(view.height)}" '
        f'viewBox="0 0 {_f(view.width)} {_f(view.height)}">',
        "<title>Two equable triangles on the Eisenstein lattice</title>",
    ]
    for shape in shapes:
        pts = " ".join(f"{_f(sx)},{_f(sy)}" for sx, sy in (view.to_svg(x, y) for x, y in shape.points()))
        lines.append(
            f'<polygon id="{shape.name}" points="{pts}" fill="{shape.fill}" '
            f'stroke="{shape.stroke}" stroke-width="3" stroke-linejoin="round"/>'
        )
    if grid:
        lines.append('<g id="lattice" fill="#555555">')
        r = coefficient_range
        for cw in range(-r, r + 1):
            for c1 in range(-r, r + 1):
                x, y = to_cartesian(EisensteinInt(c1, cw))
                if view.contains(x, y):
                    sx, sy = view.to_svg(x, y)
                    lines.append(f'<circle cx="{_f(sx)}" cy="{_f(sy)}" r="2.000000"/>')
        lines.append("</g>")
        ox, oy = view.to_svg(0.0, 0.0)
        lines.append(
            f'<g id="axes" stroke="#000000" stroke-width="1">'
            f'<line x1="{_f(ox)}" y1="{_f(view.height)}" x2="{_f(ox)}" y2="0.000000"/>'
            f'<line x1="0.000000" y1="{_f(oy)}" x2="{_f(view.width)}" y2="{_f(oy)}"/>'
            "</g>"
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def write_svg(path: str | Path, grid: bool = True, coefficient_range: int = DEFAULT_RANGE) -> Path:
    path = Path(path)
    path.write_text(render_svg(grid=grid, coefficient_range=coefficient_range), encoding="utf-8")
    return path
