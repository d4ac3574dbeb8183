"""Tests for vertex ranking and adjacency of G(n, r, s)."""

import math
from itertools import combinations

import pytest

from distcolor.distgraph import (
    GraphSpec,
    degree,
    edge_count,
    edges,
    is_edge,
    neighbors,
    rank,
    unrank,
    vertex_count,
    vertices,
)
from distcolor.errors import BadInput, OutOfRange


def all_specs(n_max):
    for n in range(1, n_max + 1):
        for r in range(1, n + 1):
            for s in range(r):
                yield GraphSpec(n, r, s)


def test_spec_validation():
    GraphSpec(5, 3, 2)
    with pytest.raises(BadInput):
        GraphSpec(5, 3, 3)
    with pytest.raises(BadInput):
        GraphSpec(2, 3, 1)
    with pytest.raises(BadInput):
        GraphSpec(5, 0, 0)


def test_vertex_count():
    assert vertex_count(GraphSpec(9, 3, 2)) == 84
    assert vertex_count(GraphSpec(5, 3, 2)) == 10
    assert vertex_count(GraphSpec(6, 6, 2)) == 1


def test_rank_unrank_roundtrip():
    spec = GraphSpec(7, 3, 1)
    seen = set()
    for k in range(vertex_count(spec)):
        v = unrank(spec, k)
        assert rank(spec, v) == k
        seen.add(v)
    assert seen == set(combinations(range(7), 3))


def test_rank_extremes():
    for n, r in [(7, 3), (9, 4), (5, 5)]:
        spec = GraphSpec(n, r, 0)
        assert rank(spec, tuple(range(r))) == 0
        assert rank(spec, tuple(range(n - r, n))) == math.comb(n, r) - 1
    with pytest.raises(OutOfRange):
        unrank(GraphSpec(7, 3, 1), 35)
    with pytest.raises(BadInput):
        rank(GraphSpec(7, 3, 1), (0, 1))


def test_vertices_follow_rank_order():
    for spec in (GraphSpec(7, 3, 2), GraphSpec(6, 2, 1), GraphSpec(8, 4, 1)):
        assert vertices(spec) == [unrank(spec, k) for k in range(vertex_count(spec))]


def test_is_edge_examples():
    spec = GraphSpec(9, 3, 2)
    assert is_edge(spec, (0, 1, 2), (0, 1, 3))
    assert not is_edge(spec, (0, 1, 2), (0, 1, 2))
    assert is_edge(GraphSpec(5, 3, 1), (0, 1, 2), (0, 3, 4))


def test_adjacency_symmetric_irreflexive():
    for spec in all_specs(8):
        verts = vertices(spec)
        for u in verts:
            assert not is_edge(spec, u, u)
        for u, v in combinations(verts, 2):
            assert is_edge(spec, u, v) == is_edge(spec, v, u)


def test_degree_regularity():
    for spec in all_specs(8):
        verts = vertices(spec)
        expected = degree(spec)
        for v in verts:
            nbr = neighbors(spec, v)
            assert len(nbr) == len(set(nbr)) == expected
            # cross-check the generated neighborhood against is_edge
            assert set(nbr) == {u for u in verts if is_edge(spec, v, u)}


def test_edges_stream():
    spec = GraphSpec(5, 3, 2)
    stream = list(edges(spec))
    assert len(stream) == 30 == edge_count(spec)
    assert stream == sorted(stream)
    assert len(set(stream)) == 30
    verts = vertices(spec)
    for a, b in stream:
        assert a < b and is_edge(spec, verts[a], verts[b])
    # pairwise oracle: the stream covers exactly the adjacent pairs
    expected = {
        (a, b)
        for a in range(len(verts))
        for b in range(a + 1, len(verts))
        if is_edge(spec, verts[a], verts[b])
    }
    assert set(stream) == expected


def test_degree_example():
    assert degree(GraphSpec(9, 3, 2)) == 18


def test_complement_isomorphism():
    # complementing vertex sets maps G(5, 3, 2) onto G(5, 2, 1)
    big, small = GraphSpec(5, 3, 2), GraphSpec(5, 2, 1)
    ground = set(range(5))
    flip = lambda v: tuple(sorted(ground - set(v)))
    for u in vertices(big):
        for v in vertices(big):
            if u != v:
                assert is_edge(big, u, v) == is_edge(small, flip(u), flip(v))
