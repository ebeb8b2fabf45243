"""Parity between the compiled planarity kernel and the pure reference."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from corpus import full_corpus
from suncross.planarity import _lr_pure

_lr_cython = pytest.importorskip(
    "suncross.planarity._lr_cython",
    reason="compiled kernel not built on this install")


def _arrays(g):
    eu, ev = g.index_arrays()
    return g.vertex_count, eu, ev


@pytest.mark.parametrize("name,g", full_corpus(),
                         ids=[name for name, _ in full_corpus()])
def test_corpus_parity(name, g):
    n, eu, ev = _arrays(g)
    assert (_lr_cython.is_planar_index(n, eu, ev)
            == _lr_pure.is_planar_index(n, eu, ev))


@settings(max_examples=300, deadline=None)
@given(st.integers(3, 12), st.integers(1, 100), st.integers(0, 10**6))
def test_random_parity(n, percent, seed):
    rng = random.Random(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)
             if rng.randrange(100) < percent]
    if not edges:
        return
    eu = [a for a, b in edges]
    ev = [b for a, b in edges]
    assert (_lr_cython.is_planar_index(n, eu, ev)
            == _lr_pure.is_planar_index(n, eu, ev))


@settings(max_examples=300, deadline=None)
@given(st.integers(4, 10), st.integers(30, 90), st.integers(0, 10**6),
       st.integers(1, 4))
def test_random_planarized_parity(n, percent, seed, want):
    rng = random.Random(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)
             if rng.randrange(100) < percent]
    m = len(edges)
    eu = [a for a, b in edges]
    ev = [b for a, b in edges]
    cand = [(i, j) for i in range(m) for j in range(i + 1, m)
            if len({eu[i], ev[i], eu[j], ev[j]}) == 4]
    if not cand:
        return
    pairs = rng.sample(cand, min(want, len(cand)))
    assert (_lr_cython.is_planar_planarized_index(n, eu, ev, pairs)
            == _lr_pure.is_planar_planarized_index(n, eu, ev, pairs))


def test_multiply_crossed_edge_parity():
    # one edge carrying a chain of two dummies, both chain orders
    edges = [(0, 1), (2, 3), (4, 5), (0, 2), (1, 3)]
    eu = [a for a, b in edges]
    ev = [b for a, b in edges]
    for pairs in ([(0, 1), (0, 2)], [(0, 2), (0, 1)]):
        assert (_lr_cython.is_planar_planarized_index(6, eu, ev, pairs)
                == _lr_pure.is_planar_planarized_index(6, eu, ev, pairs))


def test_trivial_sizes():
    assert _lr_cython.is_planar_index(2, [0], [1])
    assert _lr_cython.is_planar_index(1, [], [])
    assert _lr_cython.is_planar_planarized_index(2, [0], [1], [])


@given(st.integers(31, 150), st.integers(3, 40), st.integers(0, 10 ** 6))
@settings(max_examples=200, deadline=None)
def test_sparse_large_vertex_count_parity(n, m, seed):
    # many isolated vertices relative to edges; stresses the arena size
    rng = random.Random(seed)
    m = min(m, 3 * n - 6)
    seen = set()
    eu, ev = [], []
    while len(eu) < m:
        a, b = rng.randrange(n), rng.randrange(n)
        if a != b and (min(a, b), max(a, b)) not in seen:
            seen.add((min(a, b), max(a, b)))
            eu.append(a)
            ev.append(b)
    assert (_lr_cython.is_planar_index(n, eu, ev)
            == _lr_pure.is_planar_index(n, eu, ev))
