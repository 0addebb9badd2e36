"""Structural predicates: connectivity, 3-edge-colouring, perfect matching."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

import networkx as nx

from .canon import canonical_code
from .graph import SimpleGraph

EdgeColouring3 = tuple[int, ...]


def _connected_without(g: SimpleGraph, removed: set[int]) -> bool:
    rest = [v for v in range(g.n) if v not in removed]
    if not rest:
        return True
    seen = {rest[0]}
    stack = [rest[0]]
    while stack:
        x = stack.pop()
        for y in g.adj[x]:
            if y not in seen and y not in removed:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(rest)


def vertex_connectivity(g: SimpleGraph, cap: int = 3) -> int:
    """Vertex connectivity, capped at ``cap`` (3 for cubic graphs); 0 iff disconnected."""
    if not _connected_without(g, set()):
        return 0
    for k in range(1, cap):
        if g.n - k < 2:
            return k
        for cut in combinations(range(g.n), k):
            if not _connected_without(g, set(cut)):
                return k
    return cap


def is_proper_edge_colouring(g: SimpleGraph, colours: Sequence[int]) -> bool:
    if len(colours) != g.m:
        return False
    for v in range(g.n):
        seen = [colours[e] for e in g.inc[v]]
        if len(set(seen)) != len(seen):
            return False
    return True


def proper_3_edge_colouring(g: SimpleGraph) -> EdgeColouring3 | None:
    """Exhaustive backtracking for a proper 3-edge-colouring; None proves there is none."""
    m = g.m
    if any(len(a) > 3 for a in g.adj):
        return None
    colour = [-1] * m
    used = [0] * g.n  # bitmask of colours present at each vertex

    def options(e: int) -> int:
        u, v = g.edges[e]
        return 7 & ~(used[u] | used[v])

    def assign(e: int, c: int) -> None:
        u, v = g.edges[e]
        colour[e] = c
        used[u] |= 1 << c
        used[v] |= 1 << c

    def unassign(e: int) -> None:
        u, v = g.edges[e]
        c = colour[e]
        colour[e] = -1
        used[u] &= ~(1 << c)
        used[v] &= ~(1 << c)

    def solve(left: int) -> bool:
        if left == 0:
            return True
        best, best_opts, best_cnt = -1, 0, 4
        for e in range(m):
            if colour[e] < 0:
                o = options(e)
                cnt = bin(o).count("1")
                if cnt < best_cnt:
                    best, best_opts, best_cnt = e, o, cnt
                    if cnt <= 1:
                        break
        if best_cnt == 0:
            return False
        for c in range(3):
            if best_opts >> c & 1:
                assign(best, c)
                if solve(left - 1):
                    return True
                unassign(best)
        return False

    # the edges at one vertex may be fixed to 0, 1, 2 by symmetry of colours
    left = m
    for v in range(g.n):
        if g.inc[v]:
            for c, e in enumerate(g.inc[v]):
                assign(e, c)
            left -= len(g.inc[v])
            break
    return tuple(colour) if solve(left) else None


def has_perfect_matching(g: SimpleGraph) -> bool:
    if g.n % 2:
        return False
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return 2 * len(nx.max_weight_matching(h, maxcardinality=True)) == g.n


def component_signature(g: SimpleGraph, vertices: Iterable[int]) -> tuple[bytes, ...]:
    """Sorted canonical codes of the components induced by ``vertices``."""
    vs = list(vertices)
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    return tuple(sorted(canonical_code(g.induced_subgraph(c)) for c in g.induced_components(vs)))
