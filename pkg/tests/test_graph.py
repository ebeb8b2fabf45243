import pytest
from hypothesis import given, strategies as st

from suncross.errors import InvalidParameterError, ResourceLimitError
from suncross.graph import (
    Graph,
    VertexLabel,
    cartesian_product,
    is_homeomorphic,
    is_isomorphic,
    make_complete,
    make_complete_bipartite,
    make_cycle,
    make_path,
    make_star,
    make_sunlet,
    normalize_edge,
    sunlet_star,
    suppress_degree_two,
)


def test_sunlet_basic_counts():
    g = make_sunlet(6)
    assert g.vertex_count == 12
    assert g.edge_count == 12
    degs = g.degree_sequence()
    assert degs.count(3) == 6
    assert degs.count(1) == 6


def test_sunlet_small():
    g = make_sunlet(3)
    assert g.vertex_count == 6
    assert g.edge_count == 6


def test_sunlet_rejects_n2():
    with pytest.raises(InvalidParameterError):
        make_sunlet(2)


def test_star_degree_sequence():
    assert make_star(3).degree_sequence() == (1, 1, 1, 3)


def test_star_single_edge():
    g = make_star(1)
    assert g.vertex_count == 2
    assert g.edge_count == 1


def test_star_rejects_zero():
    with pytest.raises(InvalidParameterError):
        make_star(0)


def test_product_counts():
    s6 = make_sunlet(6)
    g = cartesian_product(s6, make_star(1))
    assert g.vertex_count == 24
    assert g.edge_count == 36
    g = cartesian_product(make_sunlet(3), make_star(2))
    assert g.vertex_count == 18
    assert g.edge_count == 30


def test_product_k2_k2_is_c4():
    k2 = make_path(1)
    assert is_isomorphic(cartesian_product(k2, k2), make_cycle(4))


def test_product_commutes_up_to_isomorphism():
    pairs = [
        (make_path(2), make_star(2)),
        (make_cycle(3), make_path(1)),
        (make_star(1), make_cycle(4)),
    ]
    for g, h in pairs:
        assert is_isomorphic(cartesian_product(g, h), cartesian_product(h, g))


def test_sunlet_star_counts():
    g = sunlet_star(3, 3)
    assert g.vertex_count == 24
    assert g.edge_count == 42


@pytest.mark.parametrize("n", range(3, 13))
@pytest.mark.parametrize("m", range(1, 9))
def test_sunlet_star_count_formula(n, m):
    g = sunlet_star(n, m)
    assert g.vertex_count == 2 * n * (m + 1)
    assert g.edge_count == 2 * n * (2 * m + 1)


def test_sunlet_star_matches_generic_product():
    for n, m in [(3, 1), (3, 2), (4, 1)]:
        assert is_isomorphic(sunlet_star(n, m),
                             cartesian_product(make_sunlet(n), make_star(m)))


def test_sunlet_star_rejects_bad_params():
    with pytest.raises(InvalidParameterError):
        sunlet_star(2, 1)
    with pytest.raises(InvalidParameterError):
        sunlet_star(3, 0)


def test_suppress_path():
    a, b, c = (VertexLabel.plain(x) for x in "abc")
    g = Graph([a, b, c], [(a, b), (b, c)])
    res = suppress_degree_two(g)
    assert res.clean
    assert res.graph.edges == (normalize_edge(a, c),)


def test_suppress_idempotent():
    for g in [make_sunlet(5), make_path(4), make_cycle(7),
              make_complete_bipartite(3, 3)]:
        once = suppress_degree_two(g).graph
        twice = suppress_degree_two(once).graph
        assert once == twice


def test_suppress_pure_cycle_stops_at_triangle():
    res = suppress_degree_two(make_cycle(8))
    assert res.graph.vertex_count == 3
    assert res.blocked_parallel
    assert not res.blocked_loop


def test_isomorphic_relabeled_k33():
    g = make_complete_bipartite(3, 3)
    relabeled = Graph.from_edges(
        (VertexLabel.plain(u.key.upper()), VertexLabel.plain(v.key.upper()))
        for u, v in g.edges)
    assert is_isomorphic(g, relabeled)


def test_k33_not_isomorphic_to_c6():
    assert not is_isomorphic(make_complete_bipartite(3, 3), make_cycle(6))


def test_isomorphism_is_equivalence_on_spot_corpus():
    corpus = [make_cycle(5), make_sunlet(3), make_star(4),
              make_complete(4), make_complete_bipartite(2, 3)]
    for g in corpus:
        assert is_isomorphic(g, g)
    for g in corpus:
        for h in corpus:
            assert is_isomorphic(g, h) == is_isomorphic(h, g)


def test_isomorphism_size_cap():
    big = make_cycle(70)
    with pytest.raises(ResourceLimitError):
        is_isomorphic(big, big)


def test_cycles_homeomorphic():
    assert is_homeomorphic(make_cycle(5), make_cycle(9))


def test_label_parse_round_trip():
    for label in [VertexLabel.ring(2, 7), VertexLabel.pendant(0, 0),
                  VertexLabel.plain("w"), VertexLabel.plain("odd:name")]:
        assert VertexLabel.parse(label.key) == label


@given(st.integers(0, 40), st.integers(0, 40),
       st.sampled_from(["ring", "pendant"]))
def test_product_label_round_trip(j, i, kind):
    label = getattr(VertexLabel, kind)(j, i)
    parsed = VertexLabel.parse(label.key)
    assert parsed == label
    assert parsed.star_index == j
    assert parsed.ring_index == i


def test_graph_rejects_loops_and_parallels():
    a, b = VertexLabel.plain("a"), VertexLabel.plain("b")
    with pytest.raises(InvalidParameterError):
        Graph([a, b], [(a, a)])
    with pytest.raises(InvalidParameterError):
        Graph([a, b], [(a, b), (b, a)])


def test_graph_rejects_unknown_endpoint():
    a, b = VertexLabel.plain("a"), VertexLabel.plain("b")
    with pytest.raises(InvalidParameterError):
        Graph([a], [(a, b)])


def test_edge_induced_and_without_edges():
    g = make_cycle(5)
    sub = g.edge_induced(g.edges[:2])
    assert sub.edge_count == 2
    rest = g.without_edges(g.edges[:2])
    assert rest.edge_count == 3
    assert rest.vertex_count == 5
