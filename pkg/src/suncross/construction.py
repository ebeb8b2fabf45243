"""The upper-bound drawing family for sunlet-star products.

The drawing is laid out on a periodic strip: ring section i occupies the
column x = i, the star center row runs along y = 0, the ceil(m/2) leaves
closest to the center sit on rows y = 1..ceil(m/2) and the rest on rows
y = -1..-floor(m/2).  Within each section the star edges to far leaves bow
into the gap on the left, crossing the ring edges of nearer leaf rows; the
pendant copy hangs in the gap on the right and its star edges cross the
ring rows between it and its targets.  Ring edges wrapping from section
n-1 back to section 0 travel around the outside on nested rectangular
loops.  All coordinates are exact rationals, so the geometric converter
certifies the crossing inventory and the rotation system.
"""

from __future__ import annotations

from fractions import Fraction

from .drawing import CombinatorialDrawing
from .errors import InvalidParameterError
from .geometry import GeometricDrawing
from .geometry import geometric_to_combinatorial
from .graph import Graph, VertexLabel, sunlet_star

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)
EIGHTH = Fraction(1, 8)


def _check(n: int, m: int) -> None:
    if n < 3:
        raise InvalidParameterError(f"need n >= 3, got {n}")
    if m < 1:
        raise InvalidParameterError(f"need m >= 1, got {m}")


def upper_bound(n: int, m: int) -> int:
    """Largest crossing count the drawing construction ever needs:
    n*m*(m-1)/2."""
    _check(n, m)
    return n * (m * (m - 1) // 2)


def ring_crossing_count(n: int, m: int) -> int:
    """Crossings of the ring-product part of the construction:
    n*floor(m/2)*floor((m-1)/2)."""
    _check(n, m)
    return n * (m // 2) * ((m - 1) // 2)


def _row_of(j: int, m: int) -> int:
    """Signed row of leaf j: positive rows hold leaves 1..ceil(m/2)."""
    up = (m + 1) // 2
    return j if j <= up else -(j - up)


class _Layout:
    """Coordinate and polyline builder shared by both constructions."""

    def __init__(self, n: int, m: int):
        self.n = n
        self.m = m
        self.up = (m + 1) // 2
        self.down = m // 2
        # bow offsets grow with the leaf row so taller bows clear shorter
        # ones; all stay strictly inside the half-gap left of the column
        self.offset = {k: Fraction(k + 1, 2 * (max(self.up, self.down) + 2))
                       for k in range(1, max(self.up, self.down) + 1)}
        self.coords: dict[VertexLabel, tuple] = {}
        self.lines: dict[tuple, list] = {}

    def add_edge(self, a: VertexLabel, b: VertexLabel, points: list) -> None:
        if b < a:
            a, b = b, a
            points = list(reversed(points))
        self.lines[(a, b)] = points

    def place_ring_vertices(self) -> None:
        for i in range(self.n):
            for j in range(self.m + 1):
                y = 0 if j == 0 else _row_of(j, self.m)
                self.coords[VertexLabel.ring(j, i)] = (i, y)

    def star_edges(self) -> None:
        """Bows from each section's center into the gap on its left."""
        for i in range(self.n):
            cx = i
            centre = VertexLabel.ring(0, i)
            for j in range(1, self.m + 1):
                row = _row_of(j, self.m)
                k = abs(row)
                sgn = 1 if row > 0 else -1
                leaf = VertexLabel.ring(j, i)
                if k == 1:
                    self.add_edge(centre, leaf, [(cx, 0), (cx, sgn)])
                    continue
                bx = cx - self.offset[k]
                self.add_edge(centre, leaf, [
                    (cx, 0),
                    (bx, sgn * HALF),
                    (bx, sgn * (k - HALF)),
                    (cx, sgn * k)])

    def ring_edges(self) -> None:
        for i in range(self.n - 1):
            for j in range(self.m + 1):
                y = 0 if j == 0 else _row_of(j, self.m)
                self.add_edge(VertexLabel.ring(j, i),
                              VertexLabel.ring(j, i + 1),
                              [(i, y), (i + 1, y)])
        self._wrap_edges()

    def _wrap_edges(self) -> None:
        n = self.n
        for j in range(self.m + 1):
            y = 0 if j == 0 else _row_of(j, self.m)
            if y >= 0:
                depth = self.up - y
                top = self.up + 1 + Fraction(depth, 2)
            else:
                depth = self.down + y
                top = -(self.down + 1 + Fraction(depth, 2))
            right = n + Fraction(depth, 2)
            left = -(1 + Fraction(depth, 2))
            self.add_edge(VertexLabel.ring(j, n - 1),
                          VertexLabel.ring(j, 0),
                          [(n - 1, y), (right, y), (right, top),
                           (left, top), (left, y), (0, y)])

    def pendant_parts(self) -> None:
        """Pendant copy of each section: hub right of the column, one
        straight spoke per leaf split by the pendant-leaf vertex just
        short of its target."""
        for i in range(self.n):
            hub = VertexLabel.pendant(0, i)
            hx, hy = i + HALF, QUARTER
            self.coords[hub] = (hx, hy)
            self.add_edge(hub, VertexLabel.ring(0, i), [(hx, hy), (i, 0)])
            for j in range(1, self.m + 1):
                row = _row_of(j, self.m)
                k = abs(row)
                sub = VertexLabel.pendant(j, i)
                if row > 0:
                    sy = row - EIGHTH
                    t = Fraction(k - hy - EIGHTH, k - hy)
                else:
                    sy = row + EIGHTH
                    t = Fraction(k + hy - EIGHTH, k + hy)
                sx = hx + (i - hx) * t
                self.coords[sub] = (sx, sy)
                self.add_edge(hub, sub, [(hx, hy), (sx, sy)])
                self.add_edge(sub, VertexLabel.ring(j, i),
                              [(sx, sy), (i, row)])


def construct_ring_geometric(n: int, m: int) -> GeometricDrawing:
    """Drawing of the ring product C_n x K_{1,m} (the sub-drawing the
    sunlet construction extends)."""
    _check(n, m)
    lay = _Layout(n, m)
    lay.place_ring_vertices()
    lay.star_edges()
    lay.ring_edges()
    g = Graph.from_edges(lay.lines.keys())
    return GeometricDrawing(g, lay.coords, lay.lines)


def construct_sunlet_geometric(n: int, m: int) -> GeometricDrawing:
    """Drawing of the full sunlet product S_n x K_{1,m}."""
    _check(n, m)
    lay = _Layout(n, m)
    lay.place_ring_vertices()
    lay.star_edges()
    lay.ring_edges()
    lay.pendant_parts()
    g = sunlet_star(n, m)
    return GeometricDrawing(g, lay.coords, lay.lines)


def construct_ring_drawing(n: int, m: int) -> CombinatorialDrawing:
    """Validated drawing of C_n x K_{1,m} with ring_crossing_count(n, m)
    crossings."""
    return geometric_to_combinatorial(construct_ring_geometric(n, m))


def construct_sunlet_drawing(n: int, m: int) -> CombinatorialDrawing:
    """Validated drawing of S_n x K_{1,m} with upper_bound(n, m)
    crossings."""
    return geometric_to_combinatorial(construct_sunlet_geometric(n, m))
