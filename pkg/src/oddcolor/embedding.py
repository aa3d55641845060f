"""1-planar drawings, the associated plane graph, and face tracing.

A drawing is input data, never computed: it carries the base graph, the
set of crossing edge pairs, and a rotation system for the *planarized*
drawing.  Crossing i is planarized as vertex ``n + i`` (a 4*-vertex).
Face tracing follows the usual dart convention: the dart after (u, v) is
(v, w) where w is the successor of u in the rotation at v.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .graph import Edge, Graph, norm_edge


@dataclass(frozen=True)
class OnePlanarDrawing:
    base: Graph
    crossings: tuple[tuple[Edge, Edge], ...]
    rotation: dict[int, tuple[int, ...]]

    @property
    def num_crossings(self) -> int:
        return len(self.crossings)

    def star_id(self, crossing_index: int) -> int:
        return self.base.n + crossing_index

    def crossed_edges(self) -> set[Edge]:
        out: set[Edge] = set()
        for e1, e2 in self.crossings:
            out.add(e1)
            out.add(e2)
        return out

    def planarized_edges(self) -> set[Edge]:
        """Edge set of the planarization: uncrossed edges plus half-edges."""
        crossed = {}
        for i, (e1, e2) in enumerate(self.crossings):
            crossed[e1] = self.star_id(i)
            crossed[e2] = self.star_id(i)
        out: set[Edge] = set()
        for e in self.base.edges:
            if e in crossed:
                z = crossed[e]
                out.add(norm_edge(e[0], z))
                out.add(norm_edge(e[1], z))
            else:
                out.add(e)
        return out

    def validate(self) -> None:
        n = self.base.n
        seen_edges: set[Edge] = set()
        for e1, e2 in self.crossings:
            for e in (e1, e2):
                if e not in self.base.edges:
                    raise ValueError(f"crossing refers to non-edge {e}")
                if e in seen_edges:
                    raise ValueError(f"edge {e} crossed twice")
                seen_edges.add(e)
            ends = {e1[0], e1[1], e2[0], e2[1]}
            if len(ends) != 4:
                raise ValueError(
                    f"crossing pair {e1} x {e2} shares an endpoint"
                )
        planar_edges = self.planarized_edges()
        nverts = n + len(self.crossings)
        rot_edges: set[Edge] = set()
        for v, order in self.rotation.items():
            if not 0 <= v < nverts:
                raise ValueError(f"rotation key {v} out of range")
            if len(set(order)) != len(order):
                raise ValueError(f"rotation at {v} repeats a neighbor")
            for w in order:
                rot_edges.add(norm_edge(v, w))
        if rot_edges != planar_edges:
            missing = planar_edges - rot_edges
            extra = rot_edges - planar_edges
            raise ValueError(
                f"rotation does not cover the planarization exactly "
                f"(missing={sorted(missing)}, extra={sorted(extra)})"
            )
        for u, v in planar_edges:
            if v not in self.rotation.get(u, ()) or u not in self.rotation.get(v, ()):
                raise ValueError(f"rotation is not symmetric on edge ({u}, {v})")
        for i in range(len(self.crossings)):
            z = self.star_id(i)
            if len(self.rotation.get(z, ())) != 4:
                raise ValueError(f"crossing vertex {z} must have rotation degree 4")

    def without_vertex(self, v: int) -> "OnePlanarDrawing":
        """Drawing with every base edge at v removed (v becomes isolated)."""
        keep = [e for e in self.base.edges if v not in e]
        return _rebuild_subdrawing(self, set(keep))

    def without_edge(self, u: int, v: int) -> "OnePlanarDrawing":
        e = norm_edge(u, v)
        if e not in self.base.edges:
            raise ValueError(f"no such edge {e}")
        keep = set(self.base.edges) - {e}
        return _rebuild_subdrawing(self, keep)


def _rebuild_subdrawing(d: OnePlanarDrawing, keep: set[Edge]) -> OnePlanarDrawing:
    """Restrict a drawing to a subset of base edges, keeping vertex ids.

    Crossings with a removed member disappear; the surviving partner edge
    becomes uncrossed and its two half-edge darts are spliced back together.
    """
    n = d.base.n
    new_crossings = [
        (e1, e2) for (e1, e2) in d.crossings if e1 in keep and e2 in keep
    ]
    old_star_of_edge: dict[Edge, int] = {}
    for i, (e1, e2) in enumerate(d.crossings):
        old_star_of_edge[e1] = d.star_id(i)
        old_star_of_edge[e2] = d.star_id(i)
    # map old star id -> new star id for surviving crossings
    star_map: dict[int, int] = {}
    for new_i, pair in enumerate(new_crossings):
        old_i = d.crossings.index(pair)
        star_map[d.star_id(old_i)] = n + new_i

    # for each dropped star, the splice target: partner endpoint behind it
    # dart (x, z_old) with z dropped becomes (x, other endpoint of x's edge)
    splice: dict[tuple[int, int], int | None] = {}
    dropped_stars = set()
    for i, (e1, e2) in enumerate(d.crossings):
        z = d.star_id(i)
        if (e1, e2) in new_crossings:
            continue
        dropped_stars.add(z)
        for e in (e1, e2):
            if e in keep:
                a, b = e
                splice[(a, z)] = b
                splice[(b, z)] = a
            else:
                for x in e:
                    splice[(x, z)] = None  # edge gone entirely

    rotation: dict[int, tuple[int, ...]] = {}
    for v, order in d.rotation.items():
        if v >= n and v in dropped_stars:
            continue
        out = []
        for w in order:
            tgt: int | None = w
            if w >= n and w in dropped_stars:
                tgt = splice[(v, w)]
            elif w >= n:
                tgt = star_map[w]
            elif v < n and norm_edge(v, w) not in keep and norm_edge(v, w) in d.base.edges:
                tgt = None  # uncrossed base edge that was removed
            if tgt is not None:
                out.append(tgt)
        key = star_map.get(v, v) if v >= n else v
        rotation[key] = tuple(out)
    base = Graph.from_edge_list(sorted(keep), n=n)
    return OnePlanarDrawing(base=base, crossings=tuple(new_crossings), rotation=rotation)


@dataclass(frozen=True)
class Face:
    """A boundary walk of the planarization.

    ``walk[i]`` is a (vertex, edge) incidence: the walk leaves ``vertex``
    along ``edge``.  Non-simple faces repeat vertices; all counts downstream
    are per incidence.
    """

    walk: tuple[tuple[int, Edge], ...]

    @property
    def degree(self) -> int:
        return len(self.walk)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.walk)

    @property
    def face_edges(self) -> tuple[Edge, ...]:
        return tuple(e for _, e in self.walk)


@dataclass(frozen=True)
class AssociatedPlaneGraph:
    gstar: Graph
    star_vertices: frozenset[int]
    origin: dict[Edge, Edge]  # planarized edge -> base edge
    faces: tuple[Face, ...]
    rotation: dict[int, tuple[int, ...]]

    def is_star(self, v: int) -> bool:
        return v in self.star_vertices

    def faces_at(self, v: int) -> list[int]:
        """Indices of faces incident to v (with multiplicity)."""
        out = []
        for i, f in enumerate(self.faces):
            out.extend(i for x, _ in f.walk if x == v)
        return out

    def components(self) -> list[set[int]]:
        return self.gstar.components()

    def face_component(self, face_index: int) -> set[int]:
        """The vertex component a face belongs to."""
        v0 = self.faces[face_index].walk[0][0]
        for comp in self.gstar.components():
            if v0 in comp:
                return comp
        raise AssertionError("face vertex not in any component")


def trace_faces(rotation: Mapping[int, Sequence[int]]) -> tuple[Face, ...]:
    """Partition the darts of a rotation system into boundary walks."""
    index_of: dict[int, dict[int, int]] = {}
    for v, order in rotation.items():
        index_of[v] = {w: i for i, w in enumerate(order)}
    darts = {(u, v) for u, order in rotation.items() for v in order}
    for u, v in darts:
        if (v, u) not in darts:
            raise ValueError(f"dart ({u}, {v}) has no reverse dart")
    seen: set[tuple[int, int]] = set()
    faces: list[Face] = []
    for start in sorted(darts):
        if start in seen:
            continue
        walk: list[tuple[int, Edge]] = []
        cur = start
        while cur not in seen:
            seen.add(cur)
            u, v = cur
            walk.append((u, norm_edge(u, v)))
            order = rotation[v]
            i = index_of[v][u]
            w = order[(i + 1) % len(order)]
            cur = (v, w)
        if cur != start:
            raise ValueError(f"face walk from dart {start} did not close at {cur}")
        faces.append(Face(walk=tuple(walk)))
    return tuple(faces)


def build_associated_plane_graph(d: OnePlanarDrawing) -> AssociatedPlaneGraph:
    """Planarize a drawing: each crossing pair becomes a fresh 4*-vertex."""
    d.validate()
    n = d.base.n
    origin: dict[Edge, Edge] = {}
    crossed: dict[Edge, int] = {}
    for i, (e1, e2) in enumerate(d.crossings):
        crossed[e1] = d.star_id(i)
        crossed[e2] = d.star_id(i)
    for e in d.base.edges:
        if e in crossed:
            z = crossed[e]
            origin[norm_edge(e[0], z)] = e
            origin[norm_edge(e[1], z)] = e
        else:
            origin[e] = e
    nverts = n + len(d.crossings)
    gstar = Graph.from_edge_list(sorted(origin.keys()), n=nverts)
    stars = frozenset(range(n, nverts))
    for z in stars:
        if gstar.degree(z) != 4:
            raise ValueError(f"crossing vertex {z} has degree {gstar.degree(z)} != 4")
        for w in gstar.neighbors(z):
            if w in stars:
                raise ValueError(f"crossing vertices {z} and {w} are adjacent")
    for v in range(n):
        if gstar.degree(v) != d.base.degree(v):
            raise ValueError(
                f"planarization changed degree of vertex {v}: "
                f"{d.base.degree(v)} -> {gstar.degree(v)}"
            )
    rotation = {v: tuple(order) for v, order in d.rotation.items()}
    for v in range(nverts):
        rotation.setdefault(v, ())
    faces = trace_faces(rotation)
    apg = AssociatedPlaneGraph(
        gstar=gstar,
        star_vertices=stars,
        origin=origin,
        faces=faces,
        rotation=rotation,
    )
    _check_euler(apg)
    return apg


def _check_euler(apg: AssociatedPlaneGraph) -> None:
    """V - E + F = 2 per connected component (isolated vertices skipped)."""
    comps = [c for c in apg.gstar.components()]
    for comp in comps:
        nv = len(comp)
        if nv == 1 and not apg.gstar.adj[next(iter(comp))]:
            continue  # isolated vertex contributes nothing
        ne = sum(1 for u, v in apg.gstar.edges if u in comp)
        nf = sum(1 for f in apg.faces if f.walk[0][0] in comp)
        if nv - ne + nf != 2:
            raise ValueError(
                f"rotation system is not planar on component "
                f"{sorted(comp)[:8]}...: V-E+F = {nv}-{ne}+{nf} != 2"
            )


def face_profile(f: Face, apg: AssociatedPlaneGraph) -> tuple[tuple[int, bool], ...]:
    """Cyclic (degree, is_star) sequence along a face walk."""
    return tuple((apg.gstar.degree(v), apg.is_star(v)) for v, _ in f.walk)


# ---------------------------------------------------------------------------
# drawing JSON + DOT


def drawing_to_json(d: OnePlanarDrawing) -> str:
    edges = sorted(d.base.edges)
    idx = {e: i for i, e in enumerate(edges)}
    payload = {
        "n": d.base.n,
        "edges": [list(e) for e in edges],
        "crossings": [[idx[e1], idx[e2]] for e1, e2 in d.crossings],
        "rotation": {str(v): list(order) for v, order in sorted(d.rotation.items())},
    }
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def drawing_from_json(text: str) -> OnePlanarDrawing:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed drawing JSON: {exc}") from exc
    for key in ("n", "edges"):
        if key not in payload:
            raise ValueError(f"drawing JSON missing field {key!r}")
    n = payload["n"]
    edges = [norm_edge(int(u), int(v)) for u, v in payload["edges"]]
    base = Graph.from_edge_list(edges, n=n)
    raw_crossings = payload.get("crossings", [])
    crossings = []
    for i, j in raw_crossings:
        if not (0 <= i < len(edges) and 0 <= j < len(edges)):
            raise ValueError(f"crossing index pair [{i}, {j}] out of range")
        crossings.append((edges[i], edges[j]))
    rotation_raw = payload.get("rotation")
    if rotation_raw is None:
        if crossings:
            raise ValueError("rotation is mandatory when crossings are present")
        rotation = planar_rotation(base)
    else:
        rotation = {int(v): tuple(order) for v, order in rotation_raw.items()}
    d = OnePlanarDrawing(base=base, crossings=tuple(crossings), rotation=rotation)
    d.validate()
    return d


def planar_rotation(g: Graph) -> dict[int, tuple[int, ...]]:
    """Compute a planar rotation system for a crossing-free graph."""
    import networkx as nx

    gx = nx.Graph()
    gx.add_nodes_from(range(g.n))
    gx.add_edges_from(g.edges)
    ok, emb = nx.check_planarity(gx)
    if not ok:
        raise ValueError("graph is not planar; a rotation system is required")
    return {
        v: tuple(emb.neighbors_cw_order(v)) if g.adj[v] else ()
        for v in range(g.n)
    }


def gstar_to_dot(apg: AssociatedPlaneGraph) -> str:
    lines = ["graph gstar {"]
    for v in range(apg.gstar.n):
        shape = "box" if apg.is_star(v) else "circle"
        lines.append(f'  {v} [shape={shape}];')
    for u, v in sorted(apg.gstar.edges):
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
