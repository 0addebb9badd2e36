"""Immutable simple and cubic graph types.

Vertices are dense 0-based integers. Edges are indexed once, in the order
given at construction, and that index is what every colouring refers to.
"""

from __future__ import annotations

from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised when an edge list does not describe a simple graph."""


class SimpleGraph:
    """A finite simple undirected graph with indexed edges.

    ``adj[v]`` is the sorted tuple of neighbours of ``v``; ``edges[i]`` is the
    pair ``(u, v)`` with ``u < v``. ``edge_index`` maps both orientations of a
    pair back to its index.
    """

    __slots__ = ("n", "adj", "edges", "edge_index", "inc", "_hash")

    def __init__(self, n: int, edges: Iterable[Sequence[int]]):
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        norm: list[tuple[int, int]] = []
        index: dict[tuple[int, int], int] = {}
        nbrs: list[list[int]] = [[] for _ in range(n)]
        inc: list[list[int]] = [[] for _ in range(n)]
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u > v:
                u, v = v, u
            if (u, v) in index:
                raise GraphError(f"repeated edge ({u}, {v})")
            i = len(norm)
            norm.append((u, v))
            index[(u, v)] = i
            index[(v, u)] = i
            nbrs[u].append(v)
            nbrs[v].append(u)
            inc[u].append(i)
            inc[v].append(i)
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(norm)
        self.edge_index = index
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in nbrs)
        self.inc: tuple[tuple[int, ...], ...] = tuple(tuple(x) for x in inc)
        self._hash: int | None = None

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edge_index

    def edge_id(self, u: int, v: int) -> int:
        return self.edge_index[(u, v)]

    def other(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        return b if a == v else a

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    def relabel(self, perm: Sequence[int]) -> "SimpleGraph":
        """Graph with vertex ``v`` renamed ``perm[v]``; edge order is kept."""
        return type(self)(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def induced_components(self, vertices: Iterable[int]) -> list[list[int]]:
        """Connected components of the subgraph induced by ``vertices``."""
        inside = set(vertices)
        seen: set[int] = set()
        comps = []
        for s in sorted(inside):
            if s in seen:
                continue
            seen.add(s)
            comp = [s]
            stack = [s]
            while stack:
                x = stack.pop()
                for y in self.adj[x]:
                    if y in inside and y not in seen:
                        seen.add(y)
                        comp.append(y)
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def induced_subgraph(self, vertices: Sequence[int]) -> "SimpleGraph":
        """Induced subgraph, relabelled 0..k-1 following the order of ``vertices``."""
        pos = {v: i for i, v in enumerate(vertices)}
        es = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        return SimpleGraph(len(vertices), es)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return len(self.induced_components(range(self.n))) == 1

    def is_bipartite(self) -> bool:
        return self.bipartition() is not None

    def bipartition(self) -> list[int] | None:
        side = [-1] * self.n
        for s in range(self.n):
            if side[s] >= 0:
                continue
            side[s] = 0
            stack = [s]
            while stack:
                x = stack.pop()
                for y in self.adj[x]:
                    if side[y] < 0:
                        side[y] = 1 - side[x]
                        stack.append(y)
                    elif side[y] == side[x]:
                        return None
        return side

    def distances_from(self, s: int) -> list[int]:
        dist = [-1] * self.n
        dist[s] = 0
        frontier = [s]
        while frontier:
            nxt = []
            for x in frontier:
                for y in self.adj[x]:
                    if dist[y] < 0:
                        dist[y] = dist[x] + 1
                        nxt.append(y)
            frontier = nxt
        return dist

    def girth(self) -> float:
        best = float("inf")
        for s in range(self.n):
            dist = [-1] * self.n
            parent = [-1] * self.n
            dist[s] = 0
            queue = [s]
            for x in queue:
                for y in self.adj[x]:
                    if dist[y] < 0:
                        dist[y] = dist[x] + 1
                        parent[y] = x
                        queue.append(y)
                    elif parent[x] != y:
                        best = min(best, dist[x] + dist[y] + 1)
        return best

    def diameter(self) -> float:
        worst = 0
        for s in range(self.n):
            d = self.distances_from(s)
            if min(d) < 0:
                return float("inf")
            worst = max(worst, max(d))
        return worst

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self.n == other.n and self.edge_set() == other.edge_set()

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.edge_set()))
        return self._hash

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n}, m={self.m})"


class CubicGraph(SimpleGraph):
    """A simple 3-regular graph."""

    __slots__ = ()

    def __init__(self, n: int, edges: Iterable[Sequence[int]]):
        super().__init__(n, edges)
        if n % 2:
            raise GraphError(f"cubic graph needs an even order, got {n}")
        bad = [v for v in range(n) if len(self.adj[v]) != 3]
        if bad:
            raise GraphError(f"vertex {bad[0]} has degree {len(self.adj[bad[0]])}, expected 3")

    @classmethod
    def from_graph(cls, g: SimpleGraph) -> "CubicGraph":
        if isinstance(g, CubicGraph):
            return g
        return cls(g.n, g.edges)


def as_cubic(g: SimpleGraph) -> CubicGraph:
    return CubicGraph.from_graph(g)


def disjoint_union(*graphs: SimpleGraph) -> SimpleGraph:
    edges = []
    off = 0
    for g in graphs:
        edges.extend((u + off, v + off) for u, v in g.edges)
        off += g.n
    return SimpleGraph(off, edges)
