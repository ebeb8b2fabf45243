"""Slow independent oracles used only by the test suite.

The planarity oracle searches for a K5 or K33 subdivision directly, so it
shares no code or algorithmic idea with the left-right kernel it checks.
"""

from __future__ import annotations

from itertools import combinations

from suncross.graph import Graph


def _index_adj(g: Graph) -> list[list[int]]:
    return [[g.index_of(w) for w in g.neighbors(v)] for v in g.vertices]


def _connect_disjoint_paths(adj: list[list[int]], terminals: list[int],
                            wanted: list[tuple[int, int]]) -> bool:
    """Can the wanted terminal pairs be joined by internally disjoint paths?"""
    term_set = set(terminals)
    used: set[int] = set()

    def realize(k: int) -> bool:
        if k == len(wanted):
            return True
        s, t = wanted[k]
        # DFS over simple paths from s to t through free non-terminal vertices
        path_stack: list[tuple[int, list[int]]] = [(s, [])]
        while path_stack:
            v, internal = path_stack.pop()
            for w in adj[v]:
                if w == t:
                    used.update(internal)
                    if realize(k + 1):
                        return True
                    used.difference_update(internal)
                elif (w not in term_set and w not in used
                      and w not in internal):
                    path_stack.append((w, internal + [w]))
        return False

    return realize(0)


def contains_subdivision(g: Graph, parts: tuple[int, ...]) -> bool:
    """Whether g contains a subdivision of K5 (parts=(5,)) or K33 ((3,3))."""
    adj = _index_adj(g)
    n = len(adj)
    if parts == (5,):
        branch_deg = 4
        cands = [v for v in range(n) if len(adj[v]) >= branch_deg]
        for combo in combinations(cands, 5):
            wanted = [(a, b) for a, b in combinations(combo, 2)]
            if _connect_disjoint_paths(adj, list(combo), wanted):
                return True
        return False
    if parts == (3, 3):
        cands = [v for v in range(n) if len(adj[v]) >= 3]
        for six in combinations(cands, 6):
            for left in combinations(six, 3):
                if six[0] not in left:
                    continue          # fix one side to kill the mirror copies
                right = [v for v in six if v not in left]
                wanted = [(a, b) for a in left for b in right]
                if _connect_disjoint_paths(adj, list(six), wanted):
                    return True
        return False
    raise ValueError(f"unsupported pattern {parts}")


def is_planar_bruteforce(g: Graph) -> bool:
    """Kuratowski check: planar iff no K5 and no K33 subdivision."""
    if g.vertex_count >= 3 and g.edge_count > 3 * g.vertex_count - 6:
        return False
    return not (contains_subdivision(g, (5,))
                or contains_subdivision(g, (3, 3)))
