"""Staircase picture rendering: deterministic, marks corners and top points,
2- and 3-dimensional only."""

import pytest

from grostrata import DomainError, StandardSet
from grostrata.diagram import ascii_diagram, svg_diagram


def test_ascii_2d_marks_cells():
    s = StandardSet.from_corners([(2, 0), (0, 2)])
    lines = ascii_diagram(s).splitlines()
    # rows print y = 4..0 over columns x = 0..4
    assert lines[2] == "C . . . ."   # corner (0,2)
    assert lines[3] == "# T . . ."   # member (0,1), top point (1,1)
    assert lines[4] == "# # C . ."   # members (0,0), (1,0), corner (2,0)


def test_ascii_2d_exact_grid():
    s = StandardSet.from_corners([(1, 0)])
    art = ascii_diagram(s)
    rows = art.splitlines()[:-1]
    # members are the y-axis column; (1,0) is the corner
    assert rows[-1].startswith("# C")
    assert all(row.startswith("#") for row in rows)


def test_ascii_3d_layers():
    s = StandardSet.from_corners([(1, 0, 0), (0, 1, 0), (0, 0, 2)])
    art = ascii_diagram(s)
    assert "z=0" in art and "z=2" in art


def test_svg_outputs():
    s2 = StandardSet.from_corners([(2, 0), (0, 2)])
    svg = svg_diagram(s2)
    assert svg.startswith("<svg") and svg.endswith("</svg>")
    s3 = StandardSet.from_corners([(1, 0, 0), (0, 2, 0)])
    svg3 = svg_diagram(s3)
    assert "polygon" in svg3


def test_determinism():
    s = StandardSet.from_corners([(2, 1), (1, 2)])
    assert ascii_diagram(s) == ascii_diagram(s)
    assert svg_diagram(s) == svg_diagram(s)


def test_dimension_limit():
    s = StandardSet.from_corners([(1, 0, 0, 0)])
    with pytest.raises(DomainError):
        ascii_diagram(s)
    with pytest.raises(DomainError):
        svg_diagram(s)
