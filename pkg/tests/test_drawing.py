import pytest
from hypothesis import given, settings, strategies as st

from suncross.drawing import (
    CombinatorialDrawing,
    CrossingSpec,
    crossing_count,
    crossings_between,
    crossings_on,
    crossings_within,
    drawing_from_embedding,
    drawing_from_index_solution,
    dummy_label,
    planarize,
    validate_good_drawing,
)
from suncross.errors import BadCrossingError, DrawingValidationError, UsageError
from suncross.graph import (
    VertexLabel,
    make_complete,
    make_cycle,
    sunlet_star,
)
from suncross.planarity import RotationSystem, planar_embedding
from suncross.planarity._lr_pure import embedding_index, planarized_arrays


def k5_one_crossing():
    """A validated drawing of K5 with a single crossing."""
    k5 = make_complete(5)
    eu, ev = k5.index_arrays()
    edges = k5.edges
    for a in range(len(edges)):
        for b in range(a + 1, len(edges)):
            if set(edges[a]) & set(edges[b]):
                continue
            n2, eu2, ev2, chains = planarized_arrays(5, eu, ev, [(a, b)])
            rot = embedding_index(n2, eu2, ev2)
            if rot is not None:
                return drawing_from_index_solution(k5, [(a, b)], chains, rot)
    raise AssertionError("no planar planarization of K5 with one crossing")


def test_k5_witness_is_valid():
    d = k5_one_crossing()
    report = validate_good_drawing(d)
    assert report.ok, report.violations
    assert crossing_count(d) == 1


def test_planarize_counts():
    k5 = make_complete(5)
    edges = k5.edges
    pair = None
    for a in range(len(edges)):
        for b in range(a + 1, len(edges)):
            if not set(edges[a]) & set(edges[b]):
                pair = (edges[a], edges[b])
                break
        if pair:
            break
    g = planarize(k5, [CrossingSpec.make(0, *pair)])
    assert g.vertex_count == 6
    assert g.edge_count == 12


def test_planarize_empty_is_identity():
    k5 = make_complete(5)
    assert planarize(k5, []) == k5


def test_planarize_rejects_incident_pair():
    k5 = make_complete(5)
    e1, e2 = k5.edges[0], k5.edges[1]
    assert set(e1) & set(e2)
    with pytest.raises(BadCrossingError):
        planarize(k5, [CrossingSpec.make(0, e1, e2)])


def test_zero_crossing_drawing_validates():
    g = sunlet_star(5, 1)
    d = drawing_from_embedding(g, planar_embedding(g))
    assert validate_good_drawing(d).ok
    assert crossing_count(d) == 0


def test_ledger_primitives():
    d = k5_one_crossing()
    e1, e2 = d.crossings[0].edges
    rest = [e for e in d.base.edges if e not in (e1, e2)]
    assert crossings_between(d, [e1], [e2]) == 1
    assert crossings_between(d, [e1], rest) == 0
    assert crossings_between(d, [], []) == 0
    assert crossings_on(d, d.base.edges) == 1
    assert crossings_on(d, []) == 0
    assert crossings_on(d, [e1]) == 1
    assert crossings_within(d, [e1, e2]) == 1
    assert crossings_within(d, [e1] + rest) == 0


def test_ledger_rejects_overlapping_sets():
    d = k5_one_crossing()
    e1 = d.crossings[0].edges[0]
    with pytest.raises(UsageError):
        crossings_between(d, [e1], [e1])


def test_ledger_rejects_unknown_edge():
    d = k5_one_crossing()
    u, v = VertexLabel.plain("zz0"), VertexLabel.plain("zz1")
    with pytest.raises(UsageError):
        crossings_on(d, [(u, v)])


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2 ** 20))
def test_ledger_additivity_over_random_partitions(seed):
    import random

    d = k5_one_crossing()
    rng = random.Random(seed)
    parts = [[], [], []]
    for e in d.base.edges:
        parts[rng.randrange(3)].append(e)
    total = 0
    for i in range(3):
        total += crossings_within(d, parts[i])
        for j in range(i + 1, 3):
            total += crossings_between(d, parts[i], parts[j])
    assert total == crossing_count(d)


# ---------------------------------------------------------------------------
# mutation suite: every corrupted invariant must flip the validator


def test_mutation_duplicate_pair():
    d = k5_one_crossing()
    c = d.crossings[0]
    dup = CrossingSpec.make(1, *c.edges)
    orders = {e: (0, 1) for e in c.edges}
    mutated = CombinatorialDrawing(d.base, [c, dup], orders, d.rotations)
    report = validate_good_drawing(mutated)
    assert not report.ok
    assert "duplicate-pair" in report.categories()


def test_mutation_incident_pair():
    d = k5_one_crossing()
    base = d.base
    e1 = base.edges[0]
    shared = e1[0]
    e2 = next(e for e in base.edges
              if e != e1 and shared in e)
    bad = CrossingSpec.make(0, e1, e2)
    orders = {e1: (0,), e2: (0,)}
    mutated = CombinatorialDrawing(base, [bad], orders, d.rotations)
    report = validate_good_drawing(mutated)
    assert not report.ok
    assert "incident-pair" in report.categories()


def test_mutation_self_crossing():
    d = k5_one_crossing()
    e1 = d.base.edges[0]
    bad = CrossingSpec(0, (e1, e1))
    mutated = CombinatorialDrawing(d.base, [bad], {e1: (0,)}, d.rotations)
    report = validate_good_drawing(mutated)
    assert not report.ok
    assert "self-crossing" in report.categories()


def test_mutation_unknown_edge():
    d = k5_one_crossing()
    foreign = (VertexLabel.plain("zz0"), VertexLabel.plain("zz1"))
    ok_edge = d.crossings[0].edges[0]
    bad = CrossingSpec.make(0, ok_edge, foreign)
    mutated = CombinatorialDrawing(d.base, [bad], d.edge_orders, d.rotations)
    report = validate_good_drawing(mutated)
    assert not report.ok
    assert "unknown-edge" in report.categories()


def test_mutation_edge_order_mismatch():
    d = k5_one_crossing()
    mutated = CombinatorialDrawing(d.base, d.crossings, {}, d.rotations)
    report = validate_good_drawing(mutated)
    assert not report.ok
    assert "edge-order-mismatch" in report.categories()


def test_mutation_broken_alternation():
    d = k5_one_crossing()
    dummy = dummy_label(0)
    rots = {v: list(d.rotations.rotation(v))
            for v in d.rotations.vertices}
    a, b, c, e = rots[dummy]
    rots[dummy] = [b, a, c, e]
    mutated = CombinatorialDrawing(d.base, d.crossings, d.edge_orders,
                                   RotationSystem(rots))
    report = validate_good_drawing(mutated)
    assert not report.ok
    assert "non-alternating-dummy" in report.categories()


def test_mutation_rotation_structure():
    d = k5_one_crossing()
    rots = {v: list(d.rotations.rotation(v)) for v in d.rotations.vertices}
    some = d.base.vertices[0]
    rots[some] = rots[some][:-1] + [rots[some][0]]
    mutated = CombinatorialDrawing(d.base, d.crossings, d.edge_orders,
                                   RotationSystem(rots))
    report = validate_good_drawing(mutated)
    assert not report.ok
    assert "rotation-structure" in report.categories()


def test_mutation_genus_one_rotation():
    g = sunlet_star(3, 1)
    d = drawing_from_embedding(g, planar_embedding(g))
    assert validate_good_drawing(d).ok
    for v in g.vertices:
        rot = list(d.rotations.rotation(v))
        if len(rot) < 3:
            continue
        rots = {w: d.rotations.rotation(w) for w in d.rotations.vertices}
        rots[v] = (rot[1], rot[0]) + tuple(rot[2:])
        mutated = CombinatorialDrawing(g, (), {}, RotationSystem(rots))
        report = validate_good_drawing(mutated)
        if not report.ok:
            assert report.categories() == {"not-plane-embedding"}
            return
    raise AssertionError("no rotation swap produced a nonplanar embedding")


def test_crossing_count_requires_valid():
    d = k5_one_crossing()
    c = d.crossings[0]
    dup = CrossingSpec.make(1, *c.edges)
    orders = {e: (0, 1) for e in c.edges}
    mutated = CombinatorialDrawing(d.base, [c, dup], orders, d.rotations)
    with pytest.raises(DrawingValidationError):
        crossing_count(mutated)
