"""Heuristic minimizer: pinned small values, seeding contract,
determinism, exact-solver cross-checks, and the grid sweep."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from suncross.construction import construct_sunlet_drawing, upper_bound
from suncross.drawing import crossing_count, validate_good_drawing
from suncross.errors import DrawingValidationError, InvalidParameterError
from suncross.exact import crossing_number_exact
from suncross.graph import (Graph, VertexLabel, make_complete,
                            make_complete_bipartite, make_cycle, sunlet_star)
from suncross.heuristic import conjecture_sweep, heuristic_minimize


def random_connected(n: int, extra: int, seed: int) -> Graph:
    """Random tree plus extra chords; connected by construction."""
    rng = random.Random(seed)
    vs = [VertexLabel.plain(f"v{i}") for i in range(n)]
    edges = {(rng.randrange(i), i) for i in range(1, n)}
    want = min(n * (n - 1) // 2, n - 1 + extra)
    while len(edges) < want:
        a, b = rng.randrange(n), rng.randrange(n)
        if a != b:
            edges.add((min(a, b), max(a, b)))
    return Graph(vs, [(vs[a], vs[b]) for a, b in sorted(edges)])


class TestSmallValues:
    @pytest.mark.parametrize("g", [make_cycle(6), make_complete(4),
                                   sunlet_star(4, 1)],
                             ids=["C6", "K4", "sunlet-star-4-1"])
    def test_planar_reaches_zero(self, g):
        d = heuristic_minimize(g, passes=1, rng_seed=0)
        assert crossing_count(d) == 0

    def test_k5_reaches_one(self):
        d = heuristic_minimize(make_complete(5), passes=4, rng_seed=0)
        assert crossing_count(d) == 1

    def test_output_is_valid_drawing_of_input(self):
        g = make_complete(6)
        d = heuristic_minimize(g, passes=2, rng_seed=1)
        assert d.base == g
        assert validate_good_drawing(d).ok


class TestSeeding:
    def test_seeded_product_stays_at_bound(self):
        g = sunlet_star(3, 3)
        seed = construct_sunlet_drawing(3, 3)
        d = heuristic_minimize(g, seed_drawing=seed, passes=2, rng_seed=1)
        assert crossing_count(d) <= 9

    @pytest.mark.parametrize("n,m", [(3, 2), (4, 2), (3, 3)])
    def test_never_worse_than_seed(self, n, m):
        seed = construct_sunlet_drawing(n, m)
        d = heuristic_minimize(sunlet_star(n, m), seed_drawing=seed,
                               passes=2, rng_seed=5)
        assert crossing_count(d) <= crossing_count(seed)

    def test_zero_passes_returns_seed(self):
        seed = construct_sunlet_drawing(3, 2)
        d = heuristic_minimize(sunlet_star(3, 2), seed_drawing=seed, passes=0)
        assert d is seed

    def test_zero_passes_unseeded_still_draws(self):
        d = heuristic_minimize(make_complete(5), passes=0, rng_seed=0)
        assert validate_good_drawing(d).ok

    def test_seed_for_wrong_graph_rejected(self):
        seed = construct_sunlet_drawing(3, 2)
        with pytest.raises(DrawingValidationError):
            heuristic_minimize(make_complete(5), seed_drawing=seed, passes=1)

    def test_rejects_negative_passes(self):
        with pytest.raises(InvalidParameterError):
            heuristic_minimize(make_complete(5), passes=-1)


class TestDeterminism:
    @pytest.mark.parametrize("g", [make_complete(6), sunlet_star(3, 2)],
                             ids=["K6", "sunlet-star-3-2"])
    def test_identical_runs_identical_drawings(self, g):
        a = heuristic_minimize(g, passes=3, rng_seed=11)
        b = heuristic_minimize(g, passes=3, rng_seed=11)
        assert a.crossings == b.crossings
        assert a.rotations == b.rotations


class TestAgainstExact:
    CASES = [
        ("K5", make_complete(5), 1),
        ("K33", make_complete_bipartite(3, 3), 1),
        ("K6", make_complete(6), 3),
    ]

    @pytest.mark.parametrize("name,g,exact", CASES, ids=[c[0] for c in CASES])
    def test_heuristic_at_least_exact(self, name, g, exact):
        r = crossing_number_exact(g, exact)
        assert r.value == exact
        d = heuristic_minimize(g, passes=4, rng_seed=0)
        assert crossing_count(d) >= exact


class TestRandomGraphs:
    @given(st.integers(3, 9), st.integers(0, 8), st.integers(0, 10 ** 6))
    @settings(max_examples=40, deadline=None)
    def test_output_validates(self, n, extra, seed):
        g = random_connected(n, extra, seed)
        d = heuristic_minimize(g, passes=1, rng_seed=seed)
        assert d.base == g
        assert validate_good_drawing(d).ok


class TestSweep:
    def test_grid_matches_bound(self):
        rep = conjecture_sweep(5, 3, rng_seed=0)
        assert len(rep.cells) == 9
        assert all(c.match for c in rep.cells)
        assert all(c.best == c.upper_bound for c in rep.cells)
        assert all(c.witness is None for c in rep.cells)
        assert not any(c.budget_exhausted for c in rep.cells)

    def test_single_star_column_is_planar(self):
        rep = conjecture_sweep(5, 1, rng_seed=0)
        assert all(c.best == 0 for c in rep.cells)

    def test_two_star_cell(self):
        rep = conjecture_sweep(7, 2, rng_seed=0)
        cell = next(c for c in rep.cells if (c.n, c.m) == (7, 2))
        assert cell.best == 7
        assert cell.upper_bound == upper_bound(7, 2) == 7

    def test_budget_exhaustion_recorded(self):
        rep = conjecture_sweep(4, 2, per_cell_budget=0.0, rng_seed=0)
        assert all(c.budget_exhausted for c in rep.cells)
        assert all(c.match for c in rep.cells)

    def test_deterministic(self):
        assert conjecture_sweep(4, 2, rng_seed=3) == conjecture_sweep(
            4, 2, rng_seed=3)

    def test_rejects_bad_grid(self):
        with pytest.raises(InvalidParameterError):
            conjecture_sweep(2, 1)
        with pytest.raises(InvalidParameterError):
            conjecture_sweep(3, 0)
