"""Exact crossing-number decisions by exhaustive crossing-set search.

The decision procedure enumerates candidate crossing sets in ascending
size.  A candidate is a set of unordered pairs of non-incident edges.
When an edge is crossed more than once the planarized graph depends on
the order of the dummies along it, so every combination of per-edge
orders is tried; a good drawing realizes one of them, which makes a no
answer sound.  Candidates are generated in a fixed lexicographic order,
so the first witness found is deterministic.

Because sizes are searched in ascending order, a yes answer pins the
crossing number exactly: all smaller sizes were already excluded.  That
also forces every dummy of the extracted embedding to cross
transversally, since a touching dummy could be smoothed away, giving a
feasible set one smaller that would have been found first.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations, permutations

from .drawing import (CombinatorialDrawing, drawing_from_embedding,
                      drawing_from_index_solution, validate_good_drawing)
from .errors import InvalidParameterError, StructuralError
from .graph import Graph
from .planarity import (is_planar_arrays, is_planar_planarized_arrays,
                        planar_embedding)
from .planarity import _lr_pure

YES = "yes"
NO = "no"
BUDGET_EXHAUSTED = "budget_exhausted"
SOLVED = "solved"
UNRESOLVED = "unresolved"


@dataclass(frozen=True)
class Budget:
    """Wall-clock and planarity-call limits; None disables a limit."""

    seconds: float | None = None
    planarity_calls: int | None = None


@dataclass(frozen=True)
class Decision:
    """Outcome of a decide_leq run.

    lower_bound is the proven floor on the crossing number: for yes it
    equals the witness size (smaller sizes were exhausted), for no it is
    k + 1 or better, and after budget exhaustion it reflects the sizes
    that were fully excluded before the cutoff.
    """

    status: str                       # yes | no | budget_exhausted
    witness: CombinatorialDrawing | None
    size: int | None                  # crossings in the witness
    lower_bound: int
    planarity_calls: int
    elapsed: float


@dataclass(frozen=True)
class ExactResult:
    status: str                       # solved | unresolved
    value: int | None
    witness: CombinatorialDrawing | None
    lower_bound: int
    planarity_calls: int
    elapsed: float


def euler_lower_bound(g: Graph) -> int:
    """cr(G) >= |E| - 3|V| + 6 for simple graphs on >= 3 vertices."""
    if g.vertex_count < 3:
        return 0
    return max(0, g.edge_count - 3 * g.vertex_count + 6)


def noncrossing_candidate_pairs(g: Graph) -> list[tuple[int, int]]:
    """All unordered pairs of non-incident edges, as index pairs in
    lexicographic order."""
    eu, ev = g.index_arrays()
    pairs = []
    for i in range(len(eu)):
        a, b = eu[i], ev[i]
        for j in range(i + 1, len(eu)):
            if a == eu[j] or a == ev[j] or b == eu[j] or b == ev[j]:
                continue
            pairs.append((i, j))
    return pairs


def chain_configs(combo):
    """Yield per-edge crossing orders as {edge index: [crossing slots]}.

    Crossing slot t refers to combo[t].  Edges crossed once have a fixed
    single-element chain; each multiply-crossed edge contributes every
    permutation of its slots, independently of the other edges.  This
    covers configurations, such as three mutually crossing edges in a
    rotary pattern, that no single global ordering of the slots induces.
    """
    chain_of: dict[int, list[int]] = {}
    for t, (i, j) in enumerate(combo):
        chain_of.setdefault(i, []).append(t)
        chain_of.setdefault(j, []).append(t)
    multi = sorted(e for e, ts in chain_of.items() if len(ts) > 1)
    if not multi:
        yield chain_of
        return

    def expand(k: int):
        if k == len(multi):
            yield {e: list(ts) for e, ts in chain_of.items()}
            return
        e = multi[k]
        slots = chain_of[e]
        for perm in permutations(slots):
            chain_of[e] = list(perm)
            yield from expand(k + 1)
        chain_of[e] = slots

    yield from expand(0)


def _planarized_chained(n: int, eu, ev, size: int, chain_of):
    """Endpoint arrays of the planarization under explicit per-edge
    chains; crossing slot t becomes vertex n + t."""
    chains = [[] for _ in eu]
    for e, ts in chain_of.items():
        chains[e] = [n + t for t in ts]
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
    return n + size, eu2, ev2, chains


class _Meter:
    """Tracks the budget; polls the clock sparingly."""

    __slots__ = ("deadline", "max_calls", "calls", "start", "_tick")

    def __init__(self, budget: Budget | None):
        self.start = time.perf_counter()
        self.deadline = (None if budget is None or budget.seconds is None
                         else self.start + budget.seconds)
        self.max_calls = None if budget is None else budget.planarity_calls
        self.calls = 0
        self._tick = 0

    def spent(self) -> bool:
        if self.max_calls is not None and self.calls >= self.max_calls:
            return True
        if self.deadline is None:
            return False
        self._tick += 1
        if self._tick & 0x3FF:
            return False
        return time.perf_counter() > self.deadline

    def elapsed(self) -> float:
        return time.perf_counter() - self.start


def _witness_from(g: Graph, combo, chain_of) -> CombinatorialDrawing:
    eu, ev = g.index_arrays()
    n2, eu2, ev2, chains = _planarized_chained(
        g.vertex_count, eu, ev, len(combo), chain_of)
    rotations = _lr_pure.embedding_index(n2, eu2, ev2)
    if rotations is None:
        raise StructuralError("feasible crossing set lost its embedding")
    drawing = drawing_from_index_solution(g, list(combo), chains, rotations)
    report = validate_good_drawing(drawing)
    if not report.ok:
        raise StructuralError(
            f"extracted witness fails validation: {report.violations}")
    return drawing


def decide_leq(g: Graph, k: int, budget: Budget | None = None) -> Decision:
    """Is cr(g) <= k?  Exhaustive and sound; yes carries a validated
    witness whose crossing count is the exact crossing number."""
    if k < 0:
        raise InvalidParameterError(f"need k >= 0, got {k}")
    n = g.vertex_count
    eu, ev = g.index_arrays()
    meter = _Meter(budget)
    lower = euler_lower_bound(g)

    if lower == 0:
        meter.calls += 1
        if is_planar_arrays(n, eu, ev):
            witness = drawing_from_embedding(g, planar_embedding(g))
            return Decision(YES, witness, 0, 0, meter.calls, meter.elapsed())
        lower = 1
    if k < lower:
        return Decision(NO, None, None, lower, meter.calls, meter.elapsed())

    pairs = noncrossing_candidate_pairs(g)
    floor = lower
    for size in range(lower, k + 1):
        for combo in combinations(pairs, size):
            if meter.spent():
                return Decision(BUDGET_EXHAUSTED, None, None, floor,
                                meter.calls, meter.elapsed())
            seen = set()
            for t, (i, j) in enumerate(combo):
                seen.add(i)
                seen.add(j)
            if len(seen) == 2 * size:
                # no edge crossed twice: chain order is immaterial
                meter.calls += 1
                if is_planar_planarized_arrays(n, eu, ev, list(combo)):
                    chain_of = next(chain_configs(combo))
                    witness = _witness_from(g, combo, chain_of)
                    return Decision(YES, witness, size, size, meter.calls,
                                    meter.elapsed())
                continue
            for chain_of in chain_configs(combo):
                meter.calls += 1
                n2, eu2, ev2, _ = _planarized_chained(n, eu, ev, size,
                                                      chain_of)
                if is_planar_arrays(n2, eu2, ev2):
                    witness = _witness_from(g, combo, chain_of)
                    return Decision(YES, witness, size, size, meter.calls,
                                    meter.elapsed())
        floor = size + 1
    return Decision(NO, None, None, floor, meter.calls, meter.elapsed())


def crossing_number_exact(g: Graph, max_k: int,
                          budget: Budget | None = None) -> ExactResult:
    """Smallest k <= max_k admitting a drawing, with witness; unresolved
    when max_k or the budget is hit, carrying the proven lower bound."""
    if max_k < 0:
        raise InvalidParameterError(f"need max_k >= 0, got {max_k}")
    decision = decide_leq(g, max_k, budget)
    if decision.status == YES:
        return ExactResult(SOLVED, decision.size, decision.witness,
                           decision.lower_bound, decision.planarity_calls,
                           decision.elapsed)
    return ExactResult(UNRESOLVED, None, None, decision.lower_bound,
                       decision.planarity_calls, decision.elapsed)
