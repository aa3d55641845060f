import pytest

from oddcolor.embedding import build_associated_plane_graph
from oddcolor.generators import (
    branch_vertices,
    complete,
    complete_minus_edge,
    cycle,
    random_one_planar,
    subdivided_complete,
)


def test_cycle_counts():
    g = cycle(6)
    assert g.n == 6 and len(g.edges) == 6
    assert all(g.degree(v) == 2 for v in range(6))
    with pytest.raises(ValueError):
        cycle(2)


def test_complete_counts():
    g = complete(6)
    assert len(g.edges) == 15
    h = complete_minus_edge(6)
    assert len(h.edges) == 14 and not h.has_edge(0, 1)


def test_subdivided_complete_structure():
    g = subdivided_complete(7)
    assert g.n == 7 + 21 == 28
    assert len(g.edges) == 42
    for v in branch_vertices(7):
        assert g.degree(v) == 6
    for v in range(7, 28):
        assert g.degree(v) == 2
    # bipartite: no edge between two branch or two subdivision vertices
    for u, v in g.edges:
        assert (u < 7) != (v < 7)


def test_random_one_planar_deterministic():
    d1 = random_one_planar(20, seed=5)
    d2 = random_one_planar(20, seed=5)
    assert d1.base == d2.base
    assert d1.crossings == d2.crossings
    assert d1.rotation == d2.rotation
    d3 = random_one_planar(20, seed=6)
    assert (d1.base, d1.crossings, d1.rotation) != (d3.base, d3.crossings, d3.rotation)


def test_random_one_planar_has_crossings():
    d = random_one_planar(30, seed=1)
    assert d.num_crossings >= 1
    assert d.num_crossings <= max(1, 30 // 5)


def test_random_one_planar_crossing_cap():
    d = random_one_planar(25, seed=2, crossings=2)
    assert d.num_crossings <= 2


def test_random_one_planar_minimum_size():
    with pytest.raises(ValueError):
        random_one_planar(3, seed=0)


def test_corpus_drawings_validate_and_planarize(corpus, corpus_apgs):
    for d, apg in zip(corpus, corpus_apgs):
        d.validate()  # idempotent; also ran at construction
        # planarization invariants
        for v in range(d.base.n):
            assert apg.gstar.degree(v) == d.base.degree(v)
        assert len(apg.star_vertices) == d.num_crossings
