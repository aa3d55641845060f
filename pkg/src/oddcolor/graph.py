"""Simple undirected graphs with dense integer vertex ids.

Vertices are 0..n-1.  Loops and parallel edges are rejected; isolated
vertices are representable (they matter: the odd-color condition exempts
them).  Graphs are immutable after construction and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    """Normalize an edge to (min, max) order."""
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge]
    adj: tuple[tuple[int, ...], ...]

    @property
    def vertex_count(self) -> int:
        return self.n

    @staticmethod
    def from_edge_list(pairs: Iterable[Sequence[int]], n: int | None = None) -> "Graph":
        """Build a graph from vertex pairs, deduplicating parallel edges.

        ``n`` declares the vertex count (for trailing isolated vertices);
        when omitted it is inferred from the largest id seen.
        """
        edges = set()
        top = -1
        for pair in pairs:
            u, v = pair
            if u == v:
                raise ValueError(f"loop edge not allowed: ({u}, {v})")
            if u < 0 or v < 0:
                raise ValueError(f"negative vertex id in edge ({u}, {v})")
            edges.add(norm_edge(u, v))
            top = max(top, u, v)
        if n is None:
            n = top + 1
        elif top >= n:
            raise ValueError(f"edge endpoint {top} out of range for n={n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        adj = tuple(tuple(sorted(s)) for s in nbrs)
        return Graph(n=n, edges=frozenset(edges), adj=adj)

    def degree(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise ValueError(f"unknown vertex {v}")
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        if not 0 <= v < self.n:
            raise ValueError(f"unknown vertex {v}")
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.edges

    def vertices(self) -> Iterator[int]:
        return iter(range(self.n))

    def without_vertex(self, v: int) -> "Graph":
        """Graph with all edges at v removed; v stays as an isolated vertex."""
        if not 0 <= v < self.n:
            raise ValueError(f"unknown vertex {v}")
        return Graph.from_edge_list(
            [e for e in self.edges if v not in e], n=self.n
        )

    def without_edge(self, u: int, v: int) -> "Graph":
        e = norm_edge(u, v)
        if e not in self.edges:
            raise ValueError(f"no such edge {e}")
        return Graph.from_edge_list([x for x in self.edges if x != e], n=self.n)

    def components(self) -> list[set[int]]:
        """Connected components as vertex sets (isolated vertices included)."""
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp = {s}
            seen[s] = True
            stack = [s]
            while stack:
                x = stack.pop()
                for y in self.adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.add(y)
                        stack.append(y)
            out.append(comp)
        return out

    def bridges(self) -> set[Edge]:
        """Cut edges, via iterative DFS lowpoint computation."""
        disc = [-1] * self.n
        low = [0] * self.n
        out: set[Edge] = set()
        timer = 0
        for root in range(self.n):
            if disc[root] != -1:
                continue
            # stack entries: (vertex, parent, iterator index into adj)
            stack = [(root, -1, 0)]
            disc[root] = low[root] = timer
            timer += 1
            parent_skipped = [False] * self.n
            while stack:
                v, parent, i = stack.pop()
                if i < len(self.adj[v]):
                    stack.append((v, parent, i + 1))
                    w = self.adj[v][i]
                    if w == parent and not parent_skipped[v]:
                        # skip the tree edge back to the parent exactly once
                        parent_skipped[v] = True
                        continue
                    if disc[w] == -1:
                        disc[w] = low[w] = timer
                        timer += 1
                        stack.append((w, v, 0))
                    else:
                        low[v] = min(low[v], disc[w])
                elif parent != -1:
                    low[parent] = min(low[parent], low[v])
                    if low[v] > disc[parent]:
                        out.add(norm_edge(parent, v))
        return out


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list text format.

    First meaningful line is ``p <n> <m>``, followed by ``m`` lines
    ``e <u> <v>`` with 0-based ids.  Blank lines and ``#`` comments are
    ignored.
    """
    n = None
    m = None
    pairs: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ValueError(f"line {lineno}: duplicate problem line")
            if len(parts) != 3:
                raise ValueError(f"line {lineno}: expected 'p <n> <m>'")
            n, m = int(parts[1]), int(parts[2])
        elif parts[0] == "e":
            if n is None:
                raise ValueError(f"line {lineno}: edge before problem line")
            if len(parts) != 3:
                raise ValueError(f"line {lineno}: expected 'e <u> <v>'")
            pairs.append((int(parts[1]), int(parts[2])))
        else:
            raise ValueError(f"line {lineno}: unrecognized line {line!r}")
    if n is None:
        raise ValueError("missing problem line 'p <n> <m>'")
    if m is not None and len(pairs) != m:
        raise ValueError(f"problem line declared {m} edges, found {len(pairs)}")
    return Graph.from_edge_list(pairs, n=n)


def format_edge_list(g: Graph) -> str:
    lines = [f"p {g.n} {len(g.edges)}"]
    lines.extend(f"e {u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"
