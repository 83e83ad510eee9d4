"""SVG staircase diagrams for ideals in two or three variables.

Filled dots mark minimal generators, open dots mark irreducible components,
and an open dot grows one arrow per zero coordinate: the staircase face it
witnesses continues to infinity in that axis direction.  Output is plain SVG
with class names (generator, component, arrow, staircase, axis) so that
inventories are testable; geometry is decorative.
"""

from __future__ import annotations

from .errors import PreconditionError
from .ideals import MonomialIdeal
from .lattice import Vec

UNIT = 40.0
MARGIN = 1.6
DOT = 7.0
ARROW = 0.8


def staircase_svg(ideal: MonomialIdeal) -> str:
    ideal._require_proper("staircase_svg")
    if ideal.n == 2:
        return _svg_2d(ideal)
    if ideal.n == 3:
        return _svg_3d(ideal)
    raise PreconditionError(f"staircase diagrams need n in {{2, 3}}, got n={ideal.n}")


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def _svg_2d(ideal: MonomialIdeal) -> str:
    gens = sorted(ideal.gens)
    comps = sorted(ideal.irreducible_decomposition())
    top = max(max(g[1] for g in gens), max(b[1] for b in comps)) + MARGIN
    right = max(max(g[0] for g in gens), max(b[0] for b in comps)) + MARGIN

    def point(v) -> tuple[float, float]:
        return (v[0] * UNIT, (top - v[1]) * UNIT)

    width = right * UNIT
    height = top * UNIT
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="-20 -20 {_fmt(width + 40)} {_fmt(height + 40)}">'
    ]
    # orthogonal outline: generators sorted by x have strictly decreasing y
    path = [f"M {_fmt(point((gens[0][0], top))[0])} {_fmt(point((gens[0][0], top))[1])}"]
    for k, g in enumerate(gens):
        x, y = point(g)
        path.append(f"L {_fmt(x)} {_fmt(y)}")
        nxt = gens[k + 1][0] if k + 1 < len(gens) else right
        x2, _ = point((nxt, g[1]))
        path.append(f"L {_fmt(x2)} {_fmt(y)}")
    parts.append(
        f'<path class="staircase" d="{" ".join(path)}" fill="none" stroke="#888" stroke-width="2"/>'
    )
    for axis_end in ((right, 0), (0, top)):
        x0, y0 = point((0, 0))
        x1, y1 = point(axis_end)
        parts.append(
            f'<line class="axis" x1="{_fmt(x0)}" y1="{_fmt(y0)}" x2="{_fmt(x1)}" y2="{_fmt(y1)}" stroke="#ccc" stroke-width="1"/>'
        )
    for b in comps:
        x, y = point(b)
        for i in range(2):
            if b[i] == 0:
                dx = ARROW * UNIT if i == 0 else 0.0
                dy = -ARROW * UNIT if i == 1 else 0.0
                parts.append(
                    f'<line class="arrow" x1="{_fmt(x)}" y1="{_fmt(y)}" x2="{_fmt(x + dx)}" y2="{_fmt(y + dy)}" stroke="black" stroke-width="1.5"/>'
                )
        parts.append(
            f'<circle class="component" cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(DOT)}" fill="white" stroke="black" stroke-width="2"/>'
        )
    for g in gens:
        x, y = point(g)
        parts.append(
            f'<circle class="generator" cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(DOT)}" fill="black"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _project(v) -> tuple[float, float]:
    # fixed isometric projection
    x, y, z = v
    return ((x - y) * 0.8660254, (x + y) * 0.5 - z)


def _svg_3d(ideal: MonomialIdeal) -> str:
    gens = sorted(ideal.gens)
    comps = sorted(ideal.irreducible_decomposition())
    pts = [_project(v) for v in list(gens) + list(comps)]
    span = max(max(abs(px) for px, _ in pts), 1) + MARGIN
    depth_lo = min(py for _, py in pts) - MARGIN
    depth_hi = max(py for _, py in pts) + MARGIN

    def point(v) -> tuple[float, float]:
        px, py = _project(v)
        return ((px + span) * UNIT, (depth_hi - py) * UNIT)

    width = 2 * span * UNIT
    height = (depth_hi - depth_lo) * UNIT
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="-20 -20 {_fmt(width + 40)} {_fmt(height + 40)}">'
    ]
    origin = point((0, 0, 0))
    reach = int(max(max(g) for g in gens)) + 1
    for axis in ((reach, 0, 0), (0, reach, 0), (0, 0, reach)):
        x1, y1 = point(axis)
        parts.append(
            f'<line class="axis" x1="{_fmt(origin[0])}" y1="{_fmt(origin[1])}" x2="{_fmt(x1)}" y2="{_fmt(y1)}" stroke="#ccc" stroke-width="1"/>'
        )
    for b in comps:
        x, y = point(b)
        for i in range(3):
            if b[i] == 0:
                direction = tuple(ARROW if j == i else 0 for j in range(3))
                x2, y2 = point(tuple(b[j] + direction[j] for j in range(3)))
                parts.append(
                    f'<line class="arrow" x1="{_fmt(x)}" y1="{_fmt(y)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" stroke="black" stroke-width="1.5"/>'
                )
        parts.append(
            f'<circle class="component" cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(DOT)}" fill="white" stroke="black" stroke-width="2"/>'
        )
    for g in gens:
        x, y = point(g)
        parts.append(
            f'<circle class="generator" cx="{_fmt(x)}" cy="{_fmt(y)}" r="{_fmt(DOT)}" fill="black"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
