"""Left-right planarity criterion, pure-Python reference kernel.

Iterative formulation: a DFS orientation pass computes lowpoints and nesting
depths, a testing pass maintains a stack of conflict pairs of back-edge
intervals, and an optional embedding pass resolves edge sides into a rotation
system.  Vertices are integers 0..n-1; edges arrive as two parallel endpoint
arrays; dart 2*e points from eu[e] to ev[e] and dart 2*e+1 the other way.

This module is the behavioral reference: the compiled kernel must return
identical booleans, and the embedding extractor here is the only one (witness
construction is never on the hot path).
"""

from __future__ import annotations

NONE = -1


class _Interval:
    """A maximal chunk of same-side back edges, low and high dart."""

    __slots__ = ("low", "high")

    def __init__(self, low: int = NONE, high: int = NONE):
        self.low = low
        self.high = high

    def empty(self) -> bool:
        return self.low == NONE and self.high == NONE

    def copy(self) -> "_Interval":
        return _Interval(self.low, self.high)


class _ConflictPair:
    """Left/right interval pair on the constraint stack."""

    __slots__ = ("L", "R")

    def __init__(self, L: _Interval | None = None, R: _Interval | None = None):
        self.L = L if L is not None else _Interval()
        self.R = R if R is not None else _Interval()

    def swap(self) -> None:
        self.L, self.R = self.R, self.L


class _LRState:
    def __init__(self, n: int, eu: list[int], ev: list[int]):
        m = len(eu)
        self.n = n
        self.m = m
        # dart -> tail / head vertex
        dt = [0] * (2 * m)
        dh = [0] * (2 * m)
        adj: list[list[int]] = [[] for _ in range(n)]
        for e in range(m):
            u, v = eu[e], ev[e]
            dt[2 * e] = u
            dh[2 * e] = v
            dt[2 * e + 1] = v
            dh[2 * e + 1] = u
            adj[u].append(2 * e)
            adj[v].append(2 * e + 1)
        self.dt = dt
        self.dh = dh
        self.adj = adj

        self.height = [NONE] * n
        self.parent_edge = [NONE] * n          # dart whose head is the vertex
        self.orient = [NONE] * m               # chosen dart per edge
        self.lowpt = [0] * (2 * m)
        self.lowpt2 = [0] * (2 * m)
        self.nesting_depth = [0] * (2 * m)
        self.roots: list[int] = []

        # testing state
        self.S: list[_ConflictPair] = []
        self.stack_bottom: list[_ConflictPair | None] = [None] * (2 * m)
        self.lowpt_edge = [NONE] * (2 * m)
        self.ref = [NONE] * (2 * m)
        self.side = [1] * (2 * m)
        self.ordered_adjs: list[list[int]] = [[] for _ in range(n)]

    # ------------------------------------------------------------------
    # phase 1: orientation

    def run_orientation(self) -> None:
        for v in range(self.n):
            if self.height[v] == NONE:
                self.height[v] = 0
                self.roots.append(v)
                self._dfs_orientation(v)
        out = self.ordered_adjs
        for e in range(self.m):
            d = self.orient[e]
            if d != NONE:
                out[self.dt[d]].append(d)
        nd = self.nesting_depth
        for v in range(self.n):
            out[v].sort(key=nd.__getitem__)

    def _dfs_orientation(self, root: int) -> None:
        height = self.height
        lowpt = self.lowpt
        lowpt2 = self.lowpt2
        orient = self.orient
        dh = self.dh
        stack = [root]
        ind = [0] * self.n
        skip_init = [False] * (2 * self.m)
        while stack:
            v = stack.pop()
            e = self.parent_edge[v]
            hv = height[v]
            nbrs = self.adj[v]
            while ind[v] < len(nbrs):
                d = nbrs[ind[v]]
                if not skip_init[d]:
                    if orient[d >> 1] != NONE:
                        ind[v] += 1
                        continue
                    orient[d >> 1] = d
                    lowpt[d] = hv
                    lowpt2[d] = hv
                    w = dh[d]
                    if height[w] == NONE:       # tree edge
                        self.parent_edge[w] = d
                        height[w] = hv + 1
                        stack.append(v)
                        stack.append(w)
                        skip_init[d] = True
                        break
                    lowpt[d] = height[w]        # back edge
                self.nesting_depth[d] = 2 * lowpt[d]
                if lowpt2[d] < hv:              # chordal
                    self.nesting_depth[d] += 1
                if e != NONE:
                    if lowpt[d] < lowpt[e]:
                        lowpt2[e] = min(lowpt[e], lowpt2[d])
                        lowpt[e] = lowpt[d]
                    elif lowpt[d] > lowpt[e]:
                        lowpt2[e] = min(lowpt2[e], lowpt[d])
                    else:
                        lowpt2[e] = min(lowpt2[e], lowpt2[d])
                ind[v] += 1

    # ------------------------------------------------------------------
    # phase 2: testing

    def run_testing(self) -> bool:
        for v in self.roots:
            if not self._dfs_testing(v):
                return False
        return True

    def _top(self) -> _ConflictPair | None:
        return self.S[-1] if self.S else None

    def _lp(self, d: int) -> int:
        # lowpoint lookup tolerating the NONE sentinel, like a missing key
        return -(1 << 30) if d == NONE else self.lowpt[d]

    def _lowest(self, P: _ConflictPair) -> int:
        if P.L.empty():
            return self._lp(P.R.low)
        if P.R.empty():
            return self._lp(P.L.low)
        return min(self._lp(P.L.low), self._lp(P.R.low))

    def _conflicting(self, I: _Interval, b: int) -> bool:
        return I.high != NONE and self.lowpt[I.high] > self.lowpt[b]

    def _dfs_testing(self, root: int) -> bool:
        stack = [root]
        ind = [0] * self.n
        skip_init = [False] * (2 * self.m)
        while stack:
            v = stack.pop()
            e = self.parent_edge[v]
            ordered = self.ordered_adjs[v]
            skip_final = False
            while ind[v] < len(ordered):
                idx = ind[v]
                d = ordered[idx]
                if not skip_init[d]:
                    self.stack_bottom[d] = self._top()
                    w = self.dh[d]
                    if d == self.parent_edge[w]:        # tree edge
                        stack.append(v)
                        stack.append(w)
                        skip_init[d] = True
                        skip_final = True
                        break
                    self.lowpt_edge[d] = d              # back edge
                    self.S.append(_ConflictPair(R=_Interval(d, d)))
                if self.lowpt[d] < self.height[v]:      # d has a return edge
                    if idx == 0:
                        self.lowpt_edge[e] = self.lowpt_edge[d]
                    elif not self._add_constraints(d, e):
                        return False
                ind[v] += 1
            if not skip_final and e != NONE:
                self._remove_back_edges(e)
        return True

    def _add_constraints(self, d: int, e: int) -> bool:
        S = self.S
        lowpt = self.lowpt
        ref = self.ref
        P = _ConflictPair()
        # merge return edges of d into P.R
        while True:
            Q = S.pop()
            if not Q.L.empty():
                Q.swap()
            if not Q.L.empty():
                return False
            if self._lp(Q.R.low) > lowpt[e]:
                if P.R.empty():                 # topmost interval
                    P.R = Q.R.copy()
                else:
                    ref[P.R.low] = Q.R.high
                P.R.low = Q.R.low
            elif Q.R.low != NONE:               # align
                ref[Q.R.low] = self.lowpt_edge[e]
            if self._top() is self.stack_bottom[d]:
                break
        # merge conflicting return edges of earlier siblings into P.L
        while True:
            top = self._top()
            if top is None or not (self._conflicting(top.L, d)
                                   or self._conflicting(top.R, d)):
                break
            Q = S.pop()
            if self._conflicting(Q.R, d):
                Q.swap()
            if self._conflicting(Q.R, d):
                return False
            if P.R.low != NONE:                 # merge below lowpt(d) into P.R
                ref[P.R.low] = Q.R.high
            if Q.R.low != NONE:
                P.R.low = Q.R.low
            if P.L.empty():                     # topmost interval
                P.L = Q.L.copy()
            elif P.L.low != NONE:
                ref[P.L.low] = Q.L.high
            P.L.low = Q.L.low
        if not (P.L.empty() and P.R.empty()):
            S.append(P)
        return True

    def _remove_back_edges(self, e: int) -> None:
        S = self.S
        u = self.dt[e]
        hu = self.height[u]
        # drop entire conflict pairs that return exactly to u
        while S and self._lowest(S[-1]) == hu:
            P = S.pop()
            if P.L.low != NONE:
                self.side[P.L.low] = -1
        if S:                                   # one more pair to trim
            P = S.pop()
            while P.L.high != NONE and self.dh[P.L.high] == u:
                P.L.high = self.ref[P.L.high]
            if P.L.high == NONE and P.L.low != NONE:
                self.ref[P.L.low] = P.R.low
                self.side[P.L.low] = -1
                P.L.low = NONE
            while P.R.high != NONE and self.dh[P.R.high] == u:
                P.R.high = self.ref[P.R.high]
            if P.R.high == NONE and P.R.low != NONE:
                self.ref[P.R.low] = P.L.low
                self.side[P.R.low] = -1
                P.R.low = NONE
            S.append(P)
        # side of e is the side of its highest return edge
        if self.lowpt[e] < hu:
            top = S[-1]
            hl = top.L.high
            hr = top.R.high
            if hl != NONE and (hr == NONE or self.lowpt[hl] > self.lowpt[hr]):
                self.ref[e] = hl
            else:
                self.ref[e] = hr

    # ------------------------------------------------------------------
    # phase 3: embedding

    def _resolved_sign(self, d: int) -> int:
        # memoized walk along ref chains
        stack = [d]
        ref = self.ref
        side = self.side
        while stack:
            cur = stack[-1]
            r = ref[cur]
            if r == NONE:
                stack.pop()
            elif ref[r] == NONE:
                side[cur] *= side[r]
                ref[cur] = NONE
                stack.pop()
            else:
                stack.append(r)
        return side[d]

    def run_embedding(self) -> list[list[int]]:
        n = self.n
        nd = self.nesting_depth
        for e in range(self.m):
            d = self.orient[e]
            if d != NONE:
                nd[d] *= self._resolved_sign(d)
        for v in range(n):
            self.ordered_adjs[v].sort(key=nd.__getitem__)

        # rotation of v as a circular doubly-linked list keyed by neighbor
        cw: list[dict[int, int]] = [{} for _ in range(n)]
        ccw: list[dict[int, int]] = [{} for _ in range(n)]
        first = [NONE] * n

        def add_cw(v: int, w: int, ref_nbr: int) -> None:
            if ref_nbr == NONE:
                cw[v][w] = w
                ccw[v][w] = w
                first[v] = w
                return
            nxt = cw[v][ref_nbr]
            cw[v][ref_nbr] = w
            cw[v][w] = nxt
            ccw[v][nxt] = w
            ccw[v][w] = ref_nbr

        def add_ccw(v: int, w: int, ref_nbr: int) -> None:
            if ref_nbr == NONE:
                add_cw(v, w, NONE)
                return
            add_cw(v, w, ccw[v][ref_nbr])
            if first[v] == ref_nbr:
                first[v] = w

        for v in range(n):
            prev = NONE
            for d in self.ordered_adjs[v]:
                add_cw(v, self.dh[d], prev)
                prev = self.dh[d]

        left_ref = [NONE] * n
        right_ref = [NONE] * n
        for root in self.roots:
            stack = [root]
            ind = [0] * n
            while stack:
                v = stack.pop()
                ordered = self.ordered_adjs[v]
                while ind[v] < len(ordered):
                    d = ordered[ind[v]]
                    ind[v] += 1
                    w = self.dh[d]
                    if d == self.parent_edge[w]:        # tree edge
                        add_ccw(w, v, first[w])         # becomes w's first
                        left_ref[v] = w
                        right_ref[v] = w
                        stack.append(v)
                        stack.append(w)
                        break
                    if self.side[d] == 1:               # back edge
                        add_cw(w, v, right_ref[w])
                    else:
                        add_ccw(w, v, left_ref[w])
                        left_ref[w] = v

        rotations: list[list[int]] = []
        for v in range(n):
            rot = []
            w = first[v]
            if w != NONE:
                start = w
                while True:
                    rot.append(w)
                    w = cw[v][w]
                    if w == start:
                        break
            rotations.append(rot)
        return rotations


def is_planar_index(n: int, eu: list[int], ev: list[int]) -> bool:
    """Planarity of the simple graph given as endpoint arrays."""
    m = len(eu)
    if m <= 2:
        return True
    if m > 3 * n - 6:
        return False
    state = _LRState(n, eu, ev)
    state.run_orientation()
    return state.run_testing()


def embedding_index(n: int, eu: list[int], ev: list[int]) -> list[list[int]] | None:
    """Rotation system of a planar embedding, or None if nonplanar.

    rotations[v] lists the neighbors of v in cyclic order.
    """
    m = len(eu)
    if n >= 3 and m > 3 * n - 6:
        return None
    state = _LRState(n, eu, ev)
    state.run_orientation()
    if not state.run_testing():
        return None
    return state.run_embedding()


def planarized_arrays(
    n: int,
    eu: list[int],
    ev: list[int],
    pairs: list[tuple[int, int]],
) -> tuple[int, list[int], list[int], list[list[int]]]:
    """Endpoint arrays of the planarization with one dummy per crossing.

    pairs lists crossings as (edge index, edge index); crossing t becomes
    vertex n + t.  When an edge takes part in several crossings its dummies
    are chained along the edge in pair-list order.  Returns the new vertex
    count, endpoint arrays, and per-edge dummy chains.
    """
    chains: list[list[int]] = [[] for _ in eu]
    for t, (a, b) in enumerate(pairs):
        chains[a].append(n + t)
        chains[b].append(n + t)
    eu2: list[int] = []
    ev2: list[int] = []
    for e in range(len(eu)):
        prev = eu[e]
        for d in chains[e]:
            eu2.append(prev)
            ev2.append(d)
            prev = d
        eu2.append(prev)
        ev2.append(ev[e])
    return n + len(pairs), eu2, ev2, chains


def is_planar_planarized_index(
    n: int,
    eu: list[int],
    ev: list[int],
    pairs: list[tuple[int, int]],
) -> bool:
    """Planarity of the planarization of (n, eu, ev) under the given crossings."""
    n2, eu2, ev2, _ = planarized_arrays(n, eu, ev, pairs)
    return is_planar_index(n2, eu2, ev2)
