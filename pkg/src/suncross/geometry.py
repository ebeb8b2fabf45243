"""Exact rational geometry for drawings given by coordinates and polylines.

All predicates run in integer arithmetic after clearing denominators, so
intersection, collinearity, and angular order are decided exactly; no
epsilons anywhere.  The converter turns a geometric drawing into the
combinatorial representation: crossings from proper segment intersections,
crossing orders from positions along each polyline, and rotations from exact
angular sorting around vertices and crossing points.
"""

from __future__ import annotations

import functools
from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping, Sequence

from .drawing import CombinatorialDrawing, CrossingSpec, dummy_label
from .errors import GeneralPositionError, InvalidParameterError
from .graph import Edge, Graph, VertexLabel, normalize_edge
from .planarity import RotationSystem

Point = tuple[Fraction, Fraction]


def as_point(x, y) -> Point:
    return (Fraction(x), Fraction(y))


class GeometricDrawing:
    """Vertex coordinates plus a polyline for every edge.

    Each polyline runs from the canonically smaller endpoint to the larger
    one and must start and end exactly at the endpoint coordinates.
    """

    __slots__ = ("_graph", "_coords", "_polylines")

    def __init__(self, graph: Graph,
                 coords: Mapping[VertexLabel, tuple],
                 polylines: Mapping[tuple[VertexLabel, VertexLabel], Sequence[tuple]]):
        self._graph = graph
        self._coords = {}
        for v in graph.vertices:
            if v not in coords:
                raise InvalidParameterError(f"vertex {v} has no coordinates")
            x, y = coords[v]
            self._coords[v] = as_point(x, y)
        seen_points = {}
        for v, p in self._coords.items():
            if p in seen_points:
                raise GeneralPositionError(
                    f"vertices {seen_points[p]} and {v} share coordinates")
            seen_points[p] = v
        self._polylines = {}
        lines = {}
        for e, pts in polylines.items():
            key = normalize_edge(*e)
            if key in lines:
                raise InvalidParameterError(
                    f"two polylines given for edge {key[0]}-{key[1]}")
            lines[key] = pts
        for e in graph.edges:
            pts = lines.get(e)
            if pts is None:
                raise InvalidParameterError(
                    f"edge {e[0]}-{e[1]} has no polyline")
            path = tuple(as_point(x, y) for x, y in pts)
            if len(path) < 2:
                raise InvalidParameterError(
                    f"polyline of {e[0]}-{e[1]} needs at least two points")
            if path[0] != self._coords[e[0]] or path[-1] != self._coords[e[1]]:
                raise InvalidParameterError(
                    f"polyline of {e[0]}-{e[1]} does not join its endpoints")
            for a, b in zip(path, path[1:]):
                if a == b:
                    raise GeneralPositionError(
                        f"zero-length segment on {e[0]}-{e[1]}")
            self._polylines[e] = path
        if len(lines) != len(graph.edges):
            raise InvalidParameterError("polylines given for unknown edges")

    @property
    def graph(self) -> Graph:
        return self._graph

    @property
    def coords(self) -> dict[VertexLabel, Point]:
        return dict(self._coords)

    @property
    def polylines(self) -> dict[Edge, tuple[Point, ...]]:
        return dict(self._polylines)

    def polyline(self, e: Edge) -> tuple[Point, ...]:
        return self._polylines[normalize_edge(*e)]


# ---------------------------------------------------------------------------
# exact predicates on integer-scaled points

IPoint = tuple[int, int]


def _cross(ox: int, oy: int, ax: int, ay: int, bx: int, by: int) -> int:
    return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox)


def _on_segment(p: IPoint, a: IPoint, b: IPoint) -> bool:
    """p lies on the closed segment ab (all integer points)."""
    if _cross(a[0], a[1], b[0], b[1], p[0], p[1]) != 0:
        return False
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def _segment_meet(a: IPoint, b: IPoint, c: IPoint, d: IPoint):
    """Classify how closed segments ab and cd meet.

    Returns one of
      None                      -- disjoint
      ("proper", t_num, u_num, den) -- one transversal interior point;
                                   the point is a + (t_num/den)*(b-a)
      ("touch", point)          -- exactly one common point, not interior
                                   to both
      ("overlap",)              -- a common sub-segment of positive length
    """
    rx, ry = b[0] - a[0], b[1] - a[1]
    sx, sy = d[0] - c[0], d[1] - c[1]
    den = rx * sy - ry * sx
    acx, acy = c[0] - a[0], c[1] - a[1]
    if den == 0:
        if acx * ry - acy * rx != 0:
            return None
        # collinear: project onto ab direction
        r2 = rx * rx + ry * ry
        t0 = acx * rx + acy * ry
        t1 = t0 + sx * rx + sy * ry
        lo, hi = min(t0, t1), max(t0, t1)
        lo = max(lo, 0)
        hi = min(hi, r2)
        if lo > hi:
            return None
        if lo == hi:
            if lo == 0:
                return ("touch", a)
            if lo == r2:
                return ("touch", b)
            return ("touch", (Fraction(a[0] * r2 + rx * lo, r2),
                              Fraction(a[1] * r2 + ry * lo, r2)))
        return ("overlap",)
    t_num = acx * sy - acy * sx
    u_num = acx * ry - acy * rx
    if den < 0:
        t_num, u_num, den2 = -t_num, -u_num, -den
    else:
        den2 = den
    if not (0 <= t_num <= den2 and 0 <= u_num <= den2):
        return None
    if 0 < t_num < den2 and 0 < u_num < den2:
        return ("proper", t_num, u_num, den2)
    px = Fraction(a[0] * den2 + rx * t_num, den2)
    py = Fraction(a[1] * den2 + ry * t_num, den2)
    return ("touch", (px, py))


def _angle_cmp(d1: tuple[int, int], d2: tuple[int, int]) -> int:
    """Counterclockwise order of direction vectors starting at +x axis."""
    b1 = 0 if (d1[1] > 0 or (d1[1] == 0 and d1[0] > 0)) else 1
    b2 = 0 if (d2[1] > 0 or (d2[1] == 0 and d2[0] > 0)) else 1
    if b1 != b2:
        return -1 if b1 < b2 else 1
    cr = d1[0] * d2[1] - d1[1] * d2[0]
    if cr > 0:
        return -1
    if cr < 0:
        return 1
    return 0


def sort_by_angle(items: Iterable, direction_of) -> list:
    """Sort items counterclockwise by exact direction; ties are an error."""
    keyed = [(direction_of(it), it) for it in items]
    ordered = sorted(keyed, key=functools.cmp_to_key(
        lambda p, q: _angle_cmp(p[0], q[0])))
    for (d1, _), (d2, _) in zip(ordered, ordered[1:]):
        if _angle_cmp(d1, d2) == 0:
            raise GeneralPositionError(
                "two edges leave a point in exactly the same direction")
    return [it for _, it in ordered]


# ---------------------------------------------------------------------------
# geometric -> combinatorial conversion


def _scaled_points(gd: GeometricDrawing):
    """All coordinates as integers over one common denominator."""
    dens = [1]
    for p in gd._coords.values():
        dens.append(p[0].denominator)
        dens.append(p[1].denominator)
    for path in gd._polylines.values():
        for p in path:
            dens.append(p[0].denominator)
            dens.append(p[1].denominator)
    scale = lcm(*dens)

    def conv(p: Point) -> IPoint:
        return (int(p[0] * scale), int(p[1] * scale))

    return scale, conv


class _Crossing:
    __slots__ = ("point", "spots")

    def __init__(self, point):
        self.point = point
        # edge index -> (segment index, numerator, denominator) position
        self.spots: dict[int, tuple[int, int, int]] = {}


def geometric_to_combinatorial(gd: GeometricDrawing) -> CombinatorialDrawing:
    """Extract crossings, orders, and rotations from exact geometry.

    Degeneracies (overlaps, triple points, touches that are not shared
    endpoints) raise GeneralPositionError naming the offending entities.
    """
    graph = gd.graph
    edges = graph.edges
    scale, conv = _scaled_points(gd)
    vertex_pt = {v: conv(p) for v, p in gd._coords.items()}
    paths = [tuple(conv(p) for p in gd._polylines[e]) for e in edges]

    # flat segment table
    seg_edge: list[int] = []
    seg_idx: list[int] = []
    seg_a: list[IPoint] = []
    seg_b: list[IPoint] = []
    for ei, path in enumerate(paths):
        for si in range(len(path) - 1):
            seg_edge.append(ei)
            seg_idx.append(si)
            seg_a.append(path[si])
            seg_b.append(path[si + 1])

    _check_vertices_off_edges(graph, edges, paths, vertex_pt)

    crossings_at: dict[tuple[Fraction, Fraction], _Crossing] = {}
    order = sorted(range(len(seg_edge)),
                   key=lambda s: min(seg_a[s][0], seg_b[s][0]))
    active: list[int] = []
    for s in order:
        ax = min(seg_a[s][0], seg_b[s][0])
        bx = max(seg_a[s][0], seg_b[s][0])
        ay = min(seg_a[s][1], seg_b[s][1])
        by = max(seg_a[s][1], seg_b[s][1])
        keep = []
        for t in active:
            if max(seg_a[t][0], seg_b[t][0]) < ax:
                continue
            keep.append(t)
            if min(seg_a[t][1], seg_b[t][1]) > by or max(
                    seg_a[t][1], seg_b[t][1]) < ay:
                continue
            _handle_segment_pair(gd, edges, paths, vertex_pt, scale,
                                 seg_edge, seg_idx, seg_a, seg_b,
                                 t, s, crossings_at)
        keep.append(s)
        active = keep

    specs, edge_orders, segment_at = _collect_crossings(edges, crossings_at)
    rotations = _build_rotations(graph, edges, paths, specs,
                                 edge_orders, segment_at)
    return CombinatorialDrawing(graph, specs, edge_orders, rotations)


def _check_vertices_off_edges(graph, edges, paths, vertex_pt) -> None:
    import bisect

    pts = sorted(((p[0], p[1], v) for v, p in vertex_pt.items()))
    xs = [p[0] for p in pts]
    for ei, path in enumerate(paths):
        e = edges[ei]
        for si in range(len(path) - 1):
            a, b = path[si], path[si + 1]
            lo = bisect.bisect_left(xs, min(a[0], b[0]))
            hi = bisect.bisect_right(xs, max(a[0], b[0]))
            ylo, yhi = min(a[1], b[1]), max(a[1], b[1])
            for k in range(lo, hi):
                x, y, v = pts[k]
                if not (ylo <= y <= yhi) or not _on_segment((x, y), a, b):
                    continue
                if v in e:
                    terminal = (path[0] if v == e[0] else path[-1])
                    if (x, y) == terminal:
                        continue
                raise GeneralPositionError(
                    f"vertex {v} lies on edge {e[0]}-{e[1]}")


def _handle_segment_pair(gd, edges, paths, vertex_pt, scale,
                         seg_edge, seg_idx, seg_a, seg_b, t, s,
                         crossings_at) -> None:
    ea, eb = seg_edge[t], seg_edge[s]
    sa, sb = seg_idx[t], seg_idx[s]
    if ea == eb:
        if abs(sa - sb) == 1:
            first, second = (sa, sb) if sa < sb else (sb, sa)
            path = paths[ea]
            meet = _segment_meet(path[first], path[first + 1],
                                 path[second], path[second + 1])
            if meet is not None and meet[0] == "overlap":
                e = edges[ea]
                raise GeneralPositionError(
                    f"edge {e[0]}-{e[1]} doubles back on itself")
            return
        meet = _segment_meet(seg_a[t], seg_b[t], seg_a[s], seg_b[s])
        if meet is not None:
            e = edges[ea]
            raise GeneralPositionError(
                f"edge {e[0]}-{e[1]} intersects itself")
        return
    meet = _segment_meet(seg_a[t], seg_b[t], seg_a[s], seg_b[s])
    if meet is None:
        return
    e1, e2 = edges[ea], edges[eb]
    if meet[0] == "overlap":
        raise GeneralPositionError(
            f"edges {e1[0]}-{e1[1]} and {e2[0]}-{e2[1]} overlap")
    if meet[0] == "touch":
        px, py = meet[1]
        shared = set(e1) & set(e2)
        for v in shared:
            vx, vy = vertex_pt[v]
            if px == vx and py == vy:
                return            # legitimate contact at a shared endpoint
        raise GeneralPositionError(
            f"edges {e1[0]}-{e1[1]} and {e2[0]}-{e2[1]} touch without "
            "crossing transversally")
    _, t_num, u_num, den = meet
    ax, ay = seg_a[t]
    bx, by = seg_b[t]
    point = (Fraction(ax * den + (bx - ax) * t_num, den * scale),
             Fraction(ay * den + (by - ay) * t_num, den * scale))
    rec = crossings_at.get(point)
    if rec is None:
        rec = _Crossing(point)
        crossings_at[point] = rec
    else:
        involved = set(rec.spots) | {ea, eb}
        if len(involved) > 2:
            names = ", ".join(
                f"{edges[e][0]}-{edges[e][1]}" for e in sorted(involved))
            raise GeneralPositionError(
                f"three or more edges meet at one point: {names}")
    rec.spots[ea] = (sa, t_num, den)
    rec.spots[eb] = (sb, u_num, den)


def _collect_crossings(edges, crossings_at):
    recs = sorted(
        crossings_at.values(),
        key=lambda r: (tuple(sorted(
            (edges[e][0].key, edges[e][1].key) for e in r.spots)),
            r.point))
    specs = []
    per_edge: dict[int, list[tuple[tuple[int, Fraction], int]]] = {}
    segment_at: list[dict[int, int]] = []
    for cid, rec in enumerate(recs):
        ea, eb = sorted(rec.spots)
        specs.append(CrossingSpec.make(cid, edges[ea], edges[eb]))
        segment_at.append({e: rec.spots[e][0] for e in (ea, eb)})
        for e in (ea, eb):
            si, num, den = rec.spots[e]
            per_edge.setdefault(e, []).append(((si, Fraction(num, den)), cid))
    edge_orders = {}
    for e, marks in per_edge.items():
        marks.sort()
        edge_orders[edges[e]] = tuple(cid for _, cid in marks)
    return specs, edge_orders, segment_at


def _build_rotations(graph, edges, paths, specs, edge_orders, segment_at):
    # stops along each edge: endpoint, dummies in crossing order, endpoint
    stops: dict[int, list[VertexLabel]] = {}
    edge_of: dict[Edge, int] = {e: i for i, e in enumerate(edges)}
    for ei, e in enumerate(edges):
        mids = [dummy_label(c) for c in edge_orders.get(e, ())]
        stops[ei] = [e[0]] + mids + [e[1]]

    rotations: dict[VertexLabel, tuple[VertexLabel, ...]] = {}

    def first_dir(path, from_start: bool) -> tuple[int, int]:
        if from_start:
            return (path[1][0] - path[0][0], path[1][1] - path[0][1])
        return (path[-2][0] - path[-1][0], path[-2][1] - path[-1][1])

    for v in graph.vertices:
        darts = []
        for w in graph.neighbors(v):
            e = normalize_edge(v, w)
            ei = edge_of[e]
            from_start = (v == e[0])
            nbr = stops[ei][1] if from_start else stops[ei][-2]
            darts.append((first_dir(paths[ei], from_start), nbr))
        ordered = sort_by_angle(darts, lambda d: d[0])
        rotations[v] = tuple(nbr for _, nbr in ordered)

    for spec in specs:
        darts = []
        for ei in (edge_of[spec.edges[0]], edge_of[spec.edges[1]]):
            k = edge_orders[edges[ei]].index(spec.id)
            seq = stops[ei]
            si = segment_at[spec.id][ei]
            path = paths[ei]
            dirv = (path[si + 1][0] - path[si][0],
                    path[si + 1][1] - path[si][1])
            darts.append((dirv, seq[k + 2]))
            darts.append(((-dirv[0], -dirv[1]), seq[k]))
        ordered = sort_by_angle(darts, lambda t: t[0])
        rotations[dummy_label(spec.id)] = tuple(nbr for _, nbr in ordered)
    return RotationSystem(rotations)
