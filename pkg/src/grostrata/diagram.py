"""Static staircase pictures for 2- and 3-dimensional standard sets.

ASCII output marks members with '#' (corners with 'C', top points with 'T');
SVG output draws filled unit cells, with an isometric projection for the
3-dimensional case.  Output is plain text, fully deterministic.
"""

from __future__ import annotations

from .errors import DomainError
from .staircase import StandardSet


def _bounds(delta: StandardSet) -> tuple[int, ...]:
    if delta.is_whole_space():
        return (3,) * delta.dim
    return tuple(m + 2 for m in delta._corner_coord_max())


def _cell(delta: StandardSet, point: tuple[int, ...], tops) -> str:
    if point in delta.corners:
        return "C"
    if point in tops:
        return "T"
    return "#" if delta.contains(point) else "."


def ascii_diagram(delta: StandardSet) -> str:
    if delta.dim not in (2, 3):
        raise DomainError("diagrams are drawn for 2 or 3 variables only")
    tops = delta.top_points()
    lines: list[str] = []
    if delta.dim == 2:
        bx, by = _bounds(delta)
        for y in range(by, -1, -1):
            lines.append(" ".join(_cell(delta, (x, y), tops) for x in range(bx + 1)))
        lines.append("legend: rows y (top-down), columns x; # member, C corner, T top point")
    else:
        bx, by, bz = _bounds(delta)
        for z in range(bz + 1):
            lines.append(f"z={z}")
            for y in range(by, -1, -1):
                lines.append("  " + " ".join(_cell(delta, (x, y, z), tops) for x in range(bx + 1)))
        lines.append("legend: one x/y layer per z; # member, C corner, T top point")
    return "\n".join(lines)


_SVG_COLORS = {"#": "#9ecae1", "C": "#3182bd", "T": "#fdae6b"}
_CELL = 24


def _svg_header(width: int, height: int) -> list[str]:
    return [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
    ]


def svg_diagram(delta: StandardSet) -> str:
    if delta.dim not in (2, 3):
        raise DomainError("diagrams are drawn for 2 or 3 variables only")
    tops = delta.top_points()
    if delta.dim == 2:
        bx, by = _bounds(delta)
        width, height = (bx + 1) * _CELL, (by + 1) * _CELL
        parts = _svg_header(width, height)
        for x in range(bx + 1):
            for y in range(by + 1):
                mark = _cell(delta, (x, y), tops)
                if mark == ".":
                    continue
                parts.append(
                    f'<rect x="{x * _CELL}" y="{(by - y) * _CELL}" width="{_CELL}" height="{_CELL}" '
                    f'fill="{_SVG_COLORS[mark]}" stroke="black"/>')
        parts.append("</svg>")
        return "\n".join(parts)

    bx, by, bz = _bounds(delta)
    # isometric: screen_x = (x - y) * c + offset, screen_y = (x + y) * c/2 - z * c
    c = _CELL
    off_x = (by + 1) * c
    off_y = (bz + 1) * c
    width = (bx + by + 2) * c
    height = (bx + by + 2) * c // 2 + (bz + 2) * c
    parts = _svg_header(width, height)
    for z in range(bz + 1):
        for y in range(by, -1, -1):
            for x in range(bx + 1):
                mark = _cell(delta, (x, y, z), tops)
                if mark == ".":
                    continue
                px = (x - y) * c + off_x
                py = (x + y) * c // 2 - z * c + off_y
                top = f"{px},{py} {px + c},{py + c // 2} {px},{py + c} {px - c},{py + c // 2}"
                parts.append(f'<polygon points="{top}" fill="{_SVG_COLORS[mark]}" stroke="black"/>')
    parts.append("</svg>")
    return "\n".join(parts)
