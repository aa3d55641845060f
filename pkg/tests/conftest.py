"""Shared hand-built drawings and the random corpus used across test modules."""

from __future__ import annotations

import pytest

from oddcolor.graph import Graph
from oddcolor.embedding import OnePlanarDrawing, build_associated_plane_graph
from oddcolor.generators import random_one_planar


def poor4_drawing() -> OnePlanarDrawing:
    """A drawing whose planarization has a poor 4-face.

    Center vertex u=0 (degree 4) and a 2-vertex v=1 bound a 4-face together
    with two crossing vertices; the far ends of u's crossed edges (x=2, y=3)
    have degree 2, hence are easy.
    """
    edges = [(0, 2), (0, 3), (1, 4), (1, 5), (2, 4), (3, 5), (0, 4), (0, 5)]
    g = Graph.from_edge_list(edges, n=6)
    rot = {
        0: (4, 6, 7, 5),
        1: (6, 7),
        2: (6, 4),
        3: (5, 7),
        4: (0, 2, 6),
        5: (0, 7, 3),
        6: (0, 4, 2, 1),
        7: (5, 0, 1, 3),
    }
    return OnePlanarDrawing(
        base=g,
        crossings=(((0, 2), (1, 4)), ((0, 3), (1, 5))),
        rotation=rot,
    )


def semipoor5_drawing(extra_leaf: bool = False) -> OnePlanarDrawing:
    """A semi-poor 5-face (a, z2, v, z1) plus a poor 4-face sharing v.

    Vertices a=0 and b=1 have degree 7; v=2 is a 2-vertex whose two edges
    are crossed by a-c and b-c, so v sits on both a 5-face with a and b and
    a 4-face with c=3.  With ``extra_leaf`` the degree of a rises to 8,
    switching a's payment from R2 to R1.
    """
    edges = [(0, 1), (0, 3), (1, 3), (2, 4), (2, 5)]
    edges += [(0, i) for i in range(6, 11)]
    edges += [(1, i) for i in range(11, 16)]
    edges += [(3, 16), (3, 17)]
    n = 18
    if extra_leaf:
        edges.append((0, 18))
        n = 19
    g = Graph.from_edge_list(edges, n=n)
    z1, z2 = n, n + 1
    a_rot = [1, 6, 7, 8, 9, 10, 18, z1] if extra_leaf else [1, 6, 7, 8, 9, 10, z1]
    rot = {
        0: tuple(a_rot),
        1: (11, 12, 13, 14, 15, 0, z2),
        2: (z1, z2),
        3: (z2, z1, 16, 17),
        4: (z1,),
        5: (z2,),
        z1: (2, 0, 4, 3),
        z2: (1, 2, 3, 5),
    }
    for leaf in range(6, 11):
        rot[leaf] = (0,)
    for leaf in range(11, 16):
        rot[leaf] = (1,)
    for leaf in (16, 17):
        rot[leaf] = (3,)
    if extra_leaf:
        rot[18] = (0,)
    return OnePlanarDrawing(
        base=g,
        crossings=(((0, 3), (2, 4)), ((1, 3), (2, 5))),
        rotation=rot,
    )


def special7_drawing() -> OnePlanarDrawing:
    """A drawing with a genuine special 7-vertex at the hub.

    Hub 0 has seven incident triangles; three of its spokes are crossed by
    the ring chords 1-2, 2-3, 3-4, producing the alternating original/4*
    neighbor pattern.  Leaves pad the ring degrees to 10, 7, 7, 7.
    """
    edges = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 4), (0, 5), (0, 6), (0, 7)]
    edges += [(1, 2), (2, 3), (3, 4)]
    edges += [(1, leaf) for leaf in range(8, 15)]
    edges += [(2, leaf) for leaf in range(15, 19)]
    edges += [(3, leaf) for leaf in range(19, 23)]
    edges += [(4, leaf) for leaf in range(23, 27)]
    g = Graph.from_edge_list(edges, n=27)
    rot = {
        0: (1, 27, 2, 28, 3, 29, 4),
        1: (27, 0, 4, 8, 9, 10, 11, 12, 13, 14),
        2: (28, 0, 27, 15, 16, 17, 18),
        3: (29, 0, 28, 19, 20, 21, 22),
        4: (1, 0, 29, 23, 24, 25, 26),
        5: (27,),
        6: (28,),
        7: (29,),
        27: (2, 0, 1, 5),
        28: (3, 0, 2, 6),
        29: (4, 0, 3, 7),
    }
    for leaf in range(8, 15):
        rot[leaf] = (1,)
    for leaf in range(15, 19):
        rot[leaf] = (2,)
    for leaf in range(19, 23):
        rot[leaf] = (3,)
    for leaf in range(23, 27):
        rot[leaf] = (4,)
    return OnePlanarDrawing(
        base=g,
        crossings=(((0, 5), (1, 2)), ((0, 6), (2, 3)), ((0, 7), (3, 4))),
        rotation=rot,
    )


def plane_c5_drawing() -> OnePlanarDrawing:
    g = Graph.from_edge_list([(i, (i + 1) % 5) for i in range(5)], n=5)
    rot = {i: ((i + 1) % 5, (i - 1) % 5) for i in range(5)}
    return OnePlanarDrawing(base=g, crossings=(), rotation=rot)


CORPUS_SIZE = 100


@pytest.fixture(scope="session")
def corpus():
    """100 seeded random 1-planar drawings with n ranging up to 40."""
    out = []
    for i in range(CORPUS_SIZE):
        n = 8 + (i % 33)  # 8..40
        out.append(random_one_planar(n, seed=i))
    return out


@pytest.fixture(scope="session")
def corpus_apgs(corpus):
    return [build_associated_plane_graph(d) for d in corpus]
