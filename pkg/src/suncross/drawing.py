"""Drawing data model and the good-drawing validator.

A combinatorial drawing is the base graph, a list of pairwise edge
crossings, the order of crossings along each crossed edge, and a rotation
system of the planarization (crossings replaced by degree-4 dummy vertices).
A drawing is good when no two crossed edges share an endpoint, no pair of
edges crosses twice, every dummy rotation alternates between its two edges,
and the planarization embeds in the plane.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import BadCrossingError, DrawingValidationError, UsageError
from .graph import Edge, Graph, VertexLabel, normalize_edge
from .planarity import RotationSystem
from .planarity.faces import genus_index

DUMMY_PREFIX = "#"


def dummy_label(crossing_id: int) -> VertexLabel:
    return VertexLabel.plain(f"{DUMMY_PREFIX}{crossing_id}")


def _normalize_pair(e1: Edge, e2: Edge) -> tuple[Edge, Edge]:
    a = normalize_edge(*e1)
    b = normalize_edge(*e2)
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class CrossingSpec:
    """One transversal crossing between two non-incident base edges."""

    id: int
    edges: tuple[Edge, Edge]

    @classmethod
    def make(cls, crossing_id: int, e1: Edge, e2: Edge) -> "CrossingSpec":
        return cls(crossing_id, _normalize_pair(e1, e2))


@dataclass(frozen=True)
class Violation:
    category: str
    message: str


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[Violation, ...]

    def categories(self) -> set[str]:
        return {v.category for v in self.violations}


def _check_crossing_specs(base: Graph,
                          crossings: Sequence[CrossingSpec]) -> list[Violation]:
    violations = []
    base_edges = set(base.edges)
    ids = set()
    pairs = set()
    for c in crossings:
        if c.id in ids:
            violations.append(Violation(
                "duplicate-id", f"crossing id {c.id} used more than once"))
        ids.add(c.id)
        e1, e2 = c.edges
        known = True
        for e in c.edges:
            if e not in base_edges:
                violations.append(Violation(
                    "unknown-edge",
                    f"crossing {c.id} references edge {e[0]}-{e[1]} "
                    "outside the base graph"))
                known = False
        if not known:
            continue
        if e1 == e2:
            violations.append(Violation(
                "self-crossing", f"crossing {c.id} crosses edge "
                f"{e1[0]}-{e1[1]} with itself"))
            continue
        if set(e1) & set(e2):
            violations.append(Violation(
                "incident-pair",
                f"crossing {c.id} pairs edges sharing endpoint "
                f"{sorted(set(e1) & set(e2))[0]}"))
        if c.edges in pairs:
            violations.append(Violation(
                "duplicate-pair",
                f"edges {e1[0]}-{e1[1]} and {e2[0]}-{e2[1]} cross twice"))
        pairs.add(c.edges)
    return violations


def _build_planarization(
    base: Graph,
    crossings: Sequence[CrossingSpec],
    edge_orders: Mapping[Edge, Sequence[int]],
) -> tuple[Graph, dict[Edge, tuple[VertexLabel, ...]]]:
    """Planarized graph plus the dummy chain along each crossed edge."""
    by_id = {c.id: c for c in crossings}
    chains: dict[Edge, tuple[VertexLabel, ...]] = {}
    edges = []
    for e in base.edges:
        order = edge_orders.get(e, ())
        chain = tuple(dummy_label(i) for i in order)
        chains[e] = chain
        prev = e[0]
        for d in chain:
            edges.append((prev, d))
            prev = d
        edges.append((prev, e[1]))
    vertices = list(base.vertices) + [dummy_label(c.id) for c in crossings]
    return Graph(vertices, edges), chains


class CombinatorialDrawing:
    """Immutable drawing; validation runs once and is cached."""

    __slots__ = ("_base", "_crossings", "_edge_orders", "_rotations",
                 "_report", "_planarization")

    def __init__(self, base: Graph, crossings: Iterable[CrossingSpec],
                 edge_orders: Mapping[Edge, Sequence[int]],
                 rotations: RotationSystem):
        self._base = base
        self._crossings = tuple(sorted(crossings, key=lambda c: c.id))
        self._edge_orders = {
            normalize_edge(*e): tuple(order)
            for e, order in edge_orders.items()}
        self._rotations = rotations
        self._report: ValidationReport | None = None
        self._planarization: tuple[Graph, dict[Edge, tuple[VertexLabel, ...]]] | None = None

    @property
    def base(self) -> Graph:
        return self._base

    @property
    def crossings(self) -> tuple[CrossingSpec, ...]:
        return self._crossings

    @property
    def edge_orders(self) -> dict[Edge, tuple[int, ...]]:
        return dict(self._edge_orders)

    @property
    def rotations(self) -> RotationSystem:
        return self._rotations

    def crossing_by_id(self, crossing_id: int) -> CrossingSpec:
        for c in self._crossings:
            if c.id == crossing_id:
                return c
        raise UsageError(f"no crossing with id {crossing_id}")

    def validate(self) -> ValidationReport:
        if self._report is None:
            self._report = validate_good_drawing(self)
        return self._report

    def require_valid(self) -> None:
        report = self.validate()
        if not report.ok:
            lines = "; ".join(v.message for v in report.violations[:4])
            raise DrawingValidationError(f"invalid drawing: {lines}")

    def planarization(self) -> tuple[Graph, dict[Edge, tuple[VertexLabel, ...]]]:
        if self._planarization is None:
            self._planarization = _build_planarization(
                self._base, self._crossings, self._edge_orders)
        return self._planarization

    def __repr__(self) -> str:
        return (f"CombinatorialDrawing({self._base!r}, "
                f"{len(self._crossings)} crossings)")


def planarize(base: Graph, crossings: Sequence[CrossingSpec],
              edge_orders: Mapping[Edge, Sequence[int]] | None = None) -> Graph:
    """Replace each crossing by a degree-4 dummy vertex.

    Without explicit edge_orders, dummies are chained along each edge in
    crossing-id order; the choice only affects which planarization is
    returned, not its vertex and edge counts.
    """
    violations = _check_crossing_specs(base, crossings)
    if violations:
        raise BadCrossingError(violations[0].message)
    for c in crossings:
        if base.has_vertex(dummy_label(c.id)):
            raise BadCrossingError(
                f"base graph already contains reserved label {dummy_label(c.id)}")
    if edge_orders is None:
        orders: dict[Edge, list[int]] = {}
        for c in sorted(crossings, key=lambda c: c.id):
            for e in c.edges:
                orders.setdefault(e, []).append(c.id)
        edge_orders = orders
    graph, _ = _build_planarization(base, crossings, edge_orders)
    return graph


def _check_edge_orders(crossings: Sequence[CrossingSpec],
                       edge_orders: Mapping[Edge, Sequence[int]]) -> list[Violation]:
    violations = []
    expected: dict[Edge, list[int]] = {}
    for c in crossings:
        for e in c.edges:
            expected.setdefault(e, []).append(c.id)
    for e, ids in expected.items():
        given = edge_orders.get(e)
        if given is None:
            violations.append(Violation(
                "edge-order-mismatch",
                f"crossed edge {e[0]}-{e[1]} has no crossing order"))
        elif sorted(given) != sorted(ids):
            violations.append(Violation(
                "edge-order-mismatch",
                f"order along {e[0]}-{e[1]} is not a permutation of its "
                "crossing ids"))
    for e in edge_orders:
        if e not in expected:
            violations.append(Violation(
                "edge-order-mismatch",
                f"order given for uncrossed edge {e[0]}-{e[1]}"))
    return violations


def _check_dummy_rotations(
    drawing: CombinatorialDrawing,
    chains: dict[Edge, tuple[VertexLabel, ...]],
) -> list[Violation]:
    """At each dummy the rotation must alternate between the two edges."""
    violations = []
    stops: dict[Edge, tuple[VertexLabel, ...]] = {}
    for e, chain in chains.items():
        stops[e] = (e[0],) + chain + (e[1],)
    neighbor_edge: dict[VertexLabel, dict[VertexLabel, Edge]] = {}
    for e, chain in chains.items():
        seq = stops[e]
        for k, d in enumerate(chain, start=1):
            neighbor_edge.setdefault(d, {})[seq[k - 1]] = e
            neighbor_edge[d][seq[k + 1]] = e
    for c in drawing.crossings:
        d = dummy_label(c.id)
        rot = drawing.rotations.rotation(d)
        owners = [neighbor_edge[d][w] for w in rot]
        if owners[0] == owners[1] or owners[1] == owners[2]:
            e1, e2 = c.edges
            violations.append(Violation(
                "non-alternating-dummy",
                f"rotation at crossing {c.id} does not alternate between "
                f"{e1[0]}-{e1[1]} and {e2[0]}-{e2[1]}"))
    return violations


def validate_good_drawing(d: CombinatorialDrawing) -> ValidationReport:
    """Check every good-drawing rule; violations become report entries."""
    violations = _check_crossing_specs(d.base, d.crossings)
    violations += _check_edge_orders(d.crossings, d.edge_orders)
    for c in d.crossings:
        if d.base.has_vertex(dummy_label(c.id)):
            violations.append(Violation(
                "reserved-label",
                f"base graph uses reserved dummy label {dummy_label(c.id)}"))
    if violations:
        return ValidationReport(False, tuple(violations))

    planarized, chains = d.planarization()
    rot = d.rotations
    structural = []
    if set(rot.vertices) != set(planarized.vertices):
        structural.append(Violation(
            "rotation-structure",
            "rotation system vertices differ from the planarization"))
    else:
        for v in planarized.vertices:
            if sorted(rot.rotation(v)) != sorted(planarized.neighbors(v)):
                structural.append(Violation(
                    "rotation-structure",
                    f"rotation at {v} is not a permutation of its neighbors"))
    if structural:
        return ValidationReport(False, tuple(violations + structural))

    violations += _check_dummy_rotations(d, chains)

    idx = {v: i for i, v in enumerate(planarized.vertices)}
    rotations_index = [[idx[w] for w in rot.rotation(v)]
                       for v in planarized.vertices]
    if genus_index(rotations_index) != 0:
        violations.append(Violation(
            "not-plane-embedding",
            "the planarization rotation system is not a plane embedding"))
    return ValidationReport(not violations, tuple(violations))


def crossing_count(d: CombinatorialDrawing) -> int:
    d.require_valid()
    return len(d.crossings)


def _resolve_edge_set(d: CombinatorialDrawing,
                      edges: Iterable[tuple[VertexLabel, VertexLabel]]) -> set[Edge]:
    out = set()
    base_edges = set(d.base.edges)
    for u, v in edges:
        e = normalize_edge(u, v)
        if e not in base_edges:
            raise UsageError(f"edge {u}-{v} is not in the drawing's base graph")
        out.add(e)
    return out


def crossings_between(d: CombinatorialDrawing,
                      a: Iterable[tuple[VertexLabel, VertexLabel]],
                      b: Iterable[tuple[VertexLabel, VertexLabel]]) -> int:
    """Crossings with one edge in a and the other in b (disjoint sets)."""
    sa = _resolve_edge_set(d, a)
    sb = _resolve_edge_set(d, b)
    if sa & sb:
        raise UsageError(
            "edge sets overlap; use crossings_within for self-pairs")
    count = 0
    for c in d.crossings:
        e1, e2 = c.edges
        if (e1 in sa and e2 in sb) or (e1 in sb and e2 in sa):
            count += 1
    return count


def crossings_within(d: CombinatorialDrawing,
                     a: Iterable[tuple[VertexLabel, VertexLabel]]) -> int:
    """Crossings with both edges in a."""
    sa = _resolve_edge_set(d, a)
    return sum(1 for c in d.crossings
               if c.edges[0] in sa and c.edges[1] in sa)


def crossings_on(d: CombinatorialDrawing,
                 a: Iterable[tuple[VertexLabel, VertexLabel]]) -> int:
    """Crossings with at least one edge in a, each counted once."""
    sa = _resolve_edge_set(d, a)
    return sum(1 for c in d.crossings
               if c.edges[0] in sa or c.edges[1] in sa)


def drawing_from_embedding(g: Graph, rotations: RotationSystem) -> CombinatorialDrawing:
    """Wrap a planar embedding as a zero-crossing drawing."""
    return CombinatorialDrawing(g, (), {}, rotations)


def drawing_from_index_solution(
    base: Graph,
    pairs: Sequence[tuple[int, int]],
    chains_index: Sequence[Sequence[int]],
    rotations_index: Sequence[Sequence[int]],
) -> CombinatorialDrawing:
    """Assemble a drawing from an index-level planarization embedding.

    pairs are edge-index pairs into base.edges; dummy vertex n+t stands for
    crossing t; chains_index[e] lists the dummies along edge e in order;
    rotations_index is a planar rotation system of the planarized graph.
    """
    n = base.vertex_count
    edges = base.edges

    def label_of(i: int) -> VertexLabel:
        return base.vertices[i] if i < n else dummy_label(i - n)

    crossings = [CrossingSpec.make(t, edges[a], edges[b])
                 for t, (a, b) in enumerate(pairs)]
    edge_orders = {
        edges[e]: tuple(d - n for d in chain)
        for e, chain in enumerate(chains_index) if chain}
    rotations = RotationSystem({
        label_of(v): tuple(label_of(w) for w in rotations_index[v])
        for v in range(len(rotations_index))})
    return CombinatorialDrawing(base, crossings, edge_orders, rotations)
