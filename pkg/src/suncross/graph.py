"""Simple undirected graphs with structured vertex labels.

Vertices of product graphs carry a (star_index, ring_index, kind) triple so
that edge families can be selected by index arithmetic; all other graphs use
plain named labels.  Graphs are immutable after construction and all
operations here are pure functions.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from .errors import InvalidParameterError, ResourceLimitError

KIND_RING = "r"
KIND_PENDANT = "p"
KIND_PLAIN = "x"


class VertexLabel:
    """Immutable vertex label.

    Product vertices are identified by star index j (0 = center), ring index
    i, and whether they live on the ring cycle or on the pendant copy.  The
    canonical string form is "j:i:r" / "j:i:p" for product vertices and
    "name:~:x" for plain ones; labels order and hash by this string.
    """

    __slots__ = ("_kind", "_star", "_ring", "_name", "_key")

    def __init__(self, kind: str, star: int | None, ring: int | None,
                 name: str | None):
        if kind in (KIND_RING, KIND_PENDANT):
            if star is None or ring is None or star < 0 or ring < 0:
                raise InvalidParameterError(
                    "product labels need non-negative star and ring indices")
            key = f"{star}:{ring}:{kind}"
        elif kind == KIND_PLAIN:
            if name is None:
                raise InvalidParameterError("plain labels need a name")
            key = f"{name}:~:{KIND_PLAIN}"
        else:
            raise InvalidParameterError(f"unknown label kind {kind!r}")
        self._kind = kind
        self._star = star
        self._ring = ring
        self._name = name
        self._key = key

    @classmethod
    def ring(cls, star: int, ring: int) -> "VertexLabel":
        return cls(KIND_RING, star, ring, None)

    @classmethod
    def pendant(cls, star: int, ring: int) -> "VertexLabel":
        return cls(KIND_PENDANT, star, ring, None)

    @classmethod
    def plain(cls, name: str) -> "VertexLabel":
        return cls(KIND_PLAIN, None, None, str(name))

    @classmethod
    def parse(cls, text: str) -> "VertexLabel":
        """Inverse of .key, accepting any canonical string form."""
        head, sep, kind = text.rpartition(":")
        if not sep:
            raise InvalidParameterError(f"malformed label {text!r}")
        if kind == KIND_PLAIN:
            name, sep, marker = head.rpartition(":")
            if not sep or marker != "~":
                raise InvalidParameterError(f"malformed plain label {text!r}")
            return cls.plain(name)
        if kind in (KIND_RING, KIND_PENDANT):
            star_s, sep, ring_s = head.partition(":")
            try:
                return cls(kind, int(star_s), int(ring_s), None)
            except ValueError:
                raise InvalidParameterError(
                    f"malformed product label {text!r}") from None
        raise InvalidParameterError(f"unknown label kind in {text!r}")

    @property
    def kind(self) -> str:
        return self._kind

    @property
    def star_index(self) -> int:
        if self._star is None:
            raise InvalidParameterError("plain labels carry no star index")
        return self._star

    @property
    def ring_index(self) -> int:
        if self._ring is None:
            raise InvalidParameterError("plain labels carry no ring index")
        return self._ring

    @property
    def name(self) -> str:
        if self._name is None:
            raise InvalidParameterError("product labels carry no name")
        return self._name

    @property
    def is_product(self) -> bool:
        return self._kind != KIND_PLAIN

    @property
    def key(self) -> str:
        return self._key

    def __repr__(self) -> str:
        return f"VertexLabel({self._key!r})"

    def __str__(self) -> str:
        return self._key

    def __eq__(self, other: object) -> bool:
        return isinstance(other, VertexLabel) and self._key == other._key

    def __lt__(self, other: "VertexLabel") -> bool:
        return self._key < other._key

    def __le__(self, other: "VertexLabel") -> bool:
        return self._key <= other._key

    def __hash__(self) -> int:
        return hash(self._key)


Edge = tuple[VertexLabel, VertexLabel]


def normalize_edge(u: VertexLabel, v: VertexLabel) -> Edge:
    """Order an endpoint pair canonically (smaller key first)."""
    if u == v:
        raise InvalidParameterError(f"loop edge at {u}")
    return (u, v) if u.key < v.key else (v, u)


class Graph:
    """Immutable simple undirected graph.

    Vertices and edges are stored in canonical (label key) order, so two
    graphs built from the same sets compare and hash equal regardless of
    input order.
    """

    __slots__ = ("_vertices", "_edges", "_adj", "_index", "_hash")

    def __init__(self, vertices: Iterable[VertexLabel],
                 edges: Iterable[tuple[VertexLabel, VertexLabel]]):
        vset: dict[VertexLabel, None] = {}
        for v in vertices:
            if v in vset:
                raise InvalidParameterError(f"duplicate vertex {v}")
            vset[v] = None
        eset: set[Edge] = set()
        for u, v in edges:
            e = normalize_edge(u, v)
            if u not in vset or v not in vset:
                raise InvalidParameterError(
                    f"edge {u}-{v} has an endpoint outside the vertex set")
            if e in eset:
                raise InvalidParameterError(f"parallel edge {u}-{v}")
            eset.add(e)
        self._vertices: tuple[VertexLabel, ...] = tuple(sorted(vset))
        self._edges: tuple[Edge, ...] = tuple(sorted(eset))
        adj: dict[VertexLabel, list[VertexLabel]] = {v: [] for v in self._vertices}
        for u, v in self._edges:
            adj[u].append(v)
            adj[v].append(u)
        self._adj: dict[VertexLabel, tuple[VertexLabel, ...]] = {
            v: tuple(sorted(ns)) for v, ns in adj.items()}
        self._index: dict[VertexLabel, int] = {
            v: i for i, v in enumerate(self._vertices)}
        self._hash = hash((self._vertices, self._edges))

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[VertexLabel, VertexLabel]],
                   isolated: Iterable[VertexLabel] = ()) -> "Graph":
        """Build a graph from an edge list, collecting endpoints as vertices."""
        edges = [normalize_edge(u, v) for u, v in edges]
        vs: dict[VertexLabel, None] = {}
        for u, v in edges:
            vs[u] = None
            vs[v] = None
        for v in isolated:
            vs[v] = None
        return cls(vs, edges)

    @property
    def vertices(self) -> tuple[VertexLabel, ...]:
        return self._vertices

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def vertex_count(self) -> int:
        return len(self._vertices)

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def has_vertex(self, v: VertexLabel) -> bool:
        return v in self._index

    def has_edge(self, u: VertexLabel, v: VertexLabel) -> bool:
        return u != v and v in self._adj.get(u, ())

    def neighbors(self, v: VertexLabel) -> tuple[VertexLabel, ...]:
        return self._adj[v]

    def degree(self, v: VertexLabel) -> int:
        return len(self._adj[v])

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(len(ns) for ns in self._adj.values()))

    def index_of(self, v: VertexLabel) -> int:
        return self._index[v]

    def index_arrays(self) -> tuple[list[int], list[int]]:
        """Edges as parallel endpoint-index lists, in canonical edge order."""
        eu = [self._index[u] for u, _ in self._edges]
        ev = [self._index[v] for _, v in self._edges]
        return eu, ev

    def is_connected(self) -> bool:
        if not self._vertices:
            return True
        seen = {self._vertices[0]}
        stack = [self._vertices[0]]
        while stack:
            for w in self._adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self._vertices)

    def edge_induced(self, edges: Iterable[tuple[VertexLabel, VertexLabel]]) -> "Graph":
        """Subgraph consisting of the given edges and their endpoints."""
        picked = []
        own = set(self._edges)
        for u, v in edges:
            e = normalize_edge(u, v)
            if e not in own:
                raise InvalidParameterError(f"edge {u}-{v} is not in the graph")
            picked.append(e)
        return Graph.from_edges(picked)

    def without_edges(self, edges: Iterable[tuple[VertexLabel, VertexLabel]]) -> "Graph":
        """Copy with the given edges removed; vertices are kept."""
        drop = {normalize_edge(u, v) for u, v in edges}
        missing = drop - set(self._edges)
        if missing:
            u, v = sorted(missing)[0]
            raise InvalidParameterError(f"edge {u}-{v} is not in the graph")
        return Graph(self._vertices, [e for e in self._edges if e not in drop])

    def drop_isolated(self) -> "Graph":
        keep = [v for v in self._vertices if self._adj[v]]
        return Graph(keep, self._edges)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Graph)
                and self._vertices == other._vertices
                and self._edges == other._edges)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph({self.vertex_count} vertices, {self.edge_count} edges)"


# ---------------------------------------------------------------------------
# generators


def make_sunlet(n: int) -> Graph:
    """Cycle on n vertices with one pendant vertex hanging off each.

    Ring vertices are labelled (0, i, ring) and the pendant attached to ring
    vertex i is (0, i, pendant); the star index is 0 because the bare sunlet
    is the m-free factor.
    """
    if n < 3:
        raise InvalidParameterError(f"sunlet graphs need n >= 3, got {n}")
    edges = []
    for i in range(n):
        edges.append((VertexLabel.ring(0, i), VertexLabel.ring(0, (i + 1) % n)))
        edges.append((VertexLabel.ring(0, i), VertexLabel.pendant(0, i)))
    return Graph.from_edges(edges)


def make_star(m: int) -> Graph:
    """Star with center c and leaves l1..lm, as plain labels."""
    if m < 1:
        raise InvalidParameterError(f"star graphs need m >= 1, got {m}")
    c = VertexLabel.plain("c")
    return Graph.from_edges(
        (c, VertexLabel.plain(f"l{j}")) for j in range(1, m + 1))


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParameterError(f"cycles need n >= 3, got {n}")
    vs = [VertexLabel.plain(f"v{i}") for i in range(n)]
    return Graph.from_edges((vs[i], vs[(i + 1) % n]) for i in range(n))


def make_path(n: int) -> Graph:
    """Path with n edges (n+1 vertices)."""
    if n < 1:
        raise InvalidParameterError(f"paths need at least one edge, got {n}")
    vs = [VertexLabel.plain(f"v{i}") for i in range(n + 1)]
    return Graph.from_edges((vs[i], vs[i + 1]) for i in range(n))


def make_complete(n: int) -> Graph:
    if n < 1:
        raise InvalidParameterError(f"complete graphs need n >= 1, got {n}")
    vs = [VertexLabel.plain(f"v{i}") for i in range(n)]
    return Graph(vs, [(vs[i], vs[j]) for i in range(n) for j in range(i + 1, n)])


def make_complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise InvalidParameterError("both sides need at least one vertex")
    left = [VertexLabel.plain(f"a{i}") for i in range(a)]
    right = [VertexLabel.plain(f"b{i}") for i in range(b)]
    return Graph(left + right, [(u, v) for u in left for v in right])


def make_complete_tripartite(a: int, b: int, c: int) -> Graph:
    if min(a, b, c) < 1:
        raise InvalidParameterError("all three sides need at least one vertex")
    pa = [VertexLabel.plain(f"a{i}") for i in range(a)]
    pb = [VertexLabel.plain(f"b{i}") for i in range(b)]
    pc = [VertexLabel.plain(f"c{i}") for i in range(c)]
    edges = ([(u, v) for u in pa for v in pb]
             + [(u, v) for u in pa for v in pc]
             + [(u, v) for u in pb for v in pc])
    return Graph(pa + pb + pc, edges)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product with pair labels rendered as plain names.

    (a,x)~(b,y) iff a=b and x~y, or x=y and a~b.
    """
    if not g.vertices or not h.vertices:
        raise InvalidParameterError("cartesian product needs nonempty factors")

    def pair(a: VertexLabel, x: VertexLabel) -> VertexLabel:
        return VertexLabel.plain(f"({a.key},{x.key})")

    vertices = [pair(a, x) for a in g.vertices for x in h.vertices]
    edges = []
    for a in g.vertices:
        for x, y in h.edges:
            edges.append((pair(a, x), pair(a, y)))
    for a, b in g.edges:
        for x in h.vertices:
            edges.append((pair(a, x), pair(b, x)))
    return Graph(vertices, edges)


def sunlet_star(n: int, m: int) -> Graph:
    """The product of a sunlet with a star, with structured labels.

    Label (j, i, ring) is the copy of star vertex j sitting at ring vertex i;
    (j, i, pendant) sits at the pendant vertex attached there.  Star index 0
    is the star's center.
    """
    if n < 3:
        raise InvalidParameterError(f"need n >= 3, got {n}")
    if m < 1:
        raise InvalidParameterError(f"need m >= 1, got {m}")
    edges = []
    for i in range(n):
        for j in range(m + 1):
            # sunlet-copy edges inside star layer j
            edges.append((VertexLabel.ring(j, i), VertexLabel.ring(j, (i + 1) % n)))
            edges.append((VertexLabel.ring(j, i), VertexLabel.pendant(j, i)))
        for j in range(1, m + 1):
            # star-copy edges at ring vertex i and at pendant vertex i
            edges.append((VertexLabel.ring(0, i), VertexLabel.ring(j, i)))
            edges.append((VertexLabel.pendant(0, i), VertexLabel.pendant(j, i)))
    return Graph.from_edges(edges)


# ---------------------------------------------------------------------------
# suppression and homeomorphism


class SuppressionResult:
    """Graph after degree-2 suppression plus the rules that blocked steps.

    blocked_loop is set when the two neighbors of some remaining degree-2
    vertex coincide (a multigraph artifact of earlier merges); blocked_parallel
    when they are already adjacent.  Both can only trigger on inputs with
    cycles of length <= 3 after merging, never on the subdivision-style
    graphs this package targets.
    """

    __slots__ = ("graph", "blocked_loop", "blocked_parallel")

    def __init__(self, graph: Graph, blocked_loop: bool, blocked_parallel: bool):
        self.graph = graph
        self.blocked_loop = blocked_loop
        self.blocked_parallel = blocked_parallel

    @property
    def clean(self) -> bool:
        return not (self.blocked_loop or self.blocked_parallel)


def suppress_degree_two(g: Graph) -> SuppressionResult:
    """Repeatedly replace a degree-2 vertex and its edges by a single edge.

    Steps that would create a loop or a parallel edge are skipped and
    reported, so the result is always simple; a pure cycle collapses to a
    triangle and stops there.
    """
    adj: dict[VertexLabel, set[VertexLabel]] = {
        v: set(g.neighbors(v)) for v in g.vertices}
    blocked_loop = False
    blocked_parallel = False
    changed = True
    while changed:
        changed = False
        for v in sorted(adj):
            if len(adj[v]) != 2:
                continue
            a, b = sorted(adj[v])
            if a == b:
                blocked_loop = True
                continue
            if b in adj[a]:
                blocked_parallel = True
                continue
            del adj[v]
            adj[a].discard(v)
            adj[b].discard(v)
            adj[a].add(b)
            adj[b].add(a)
            changed = True
    edges = set()
    for v, ns in adj.items():
        for w in ns:
            edges.add(normalize_edge(v, w))
    return SuppressionResult(Graph(adj, sorted(edges)), blocked_loop,
                             blocked_parallel)


def _refine_colors(n: int, adj: list[list[int]],
                   colors: list[int]) -> list[int]:
    # 1-WL refinement until the partition stabilizes
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in adj[v])))
                for v in range(n)]
        order = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [order[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def is_isomorphic(g: Graph, h: Graph, size_cap: int = 64) -> bool:
    """Backtracking isomorphism test for small graphs.

    Uses degree and iterated neighborhood-color pruning; intended for
    lemma-scale graphs, so inputs above size_cap vertices are rejected.
    """
    if g.vertex_count > size_cap or h.vertex_count > size_cap:
        raise ResourceLimitError(
            f"isomorphism test capped at {size_cap} vertices")
    if g.vertex_count != h.vertex_count or g.edge_count != h.edge_count:
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    n = g.vertex_count

    def adj_of(x: Graph) -> list[list[int]]:
        return [[x.index_of(w) for w in x.neighbors(v)] for v in x.vertices]

    ga, ha = adj_of(g), adj_of(h)
    gc = _refine_colors(n, ga, [len(a) for a in ga])
    hc = _refine_colors(n, ha, [len(a) for a in ha])
    if sorted(gc) != sorted(hc):
        return False

    by_color: dict[int, list[int]] = {}
    for v in range(n):
        by_color.setdefault(hc[v], []).append(v)
    # most constrained first: rare colors, then high degree
    order = sorted(range(n), key=lambda v: (len(by_color[gc[v]]), -len(ga[v]), v))
    gsets = [set(a) for a in ga]
    hsets = [set(a) for a in ha]
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(pos: int) -> bool:
        if pos == n:
            return True
        v = order[pos]
        for w in by_color[gc[v]]:
            if w in used:
                continue
            ok = True
            for u, mu in mapping.items():
                if (u in gsets[v]) != (mu in hsets[w]):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used.add(w)
                if extend(pos + 1):
                    return True
                del mapping[v]
                used.discard(w)
        return False

    return extend(0)


def is_homeomorphic(g: Graph, h: Graph, size_cap: int = 64) -> bool:
    """True when the graphs agree after full degree-2 suppression."""
    return is_isomorphic(suppress_degree_two(g).graph,
                         suppress_degree_two(h).graph, size_cap)
