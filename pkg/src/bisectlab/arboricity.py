"""Decompositions of cubic graphs into two k-linear forests, and edge
2-colourings whose monochromatic components have at most four edges."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator

from .budget import Deadline, as_deadline
from .esearch import EdgeSearchOptions, iter_edge_colourings
from .graphcore import SimpleGraph
from .wormald import EdgeTwoColouring, _class_paths


@dataclass(frozen=True)
class TwoForestDecomposition:
    colouring: EdgeTwoColouring
    paths: tuple[tuple[int, ...], tuple[int, ...]]
    k: int


def _decomposition(g: SimpleGraph, col: tuple[int, ...], k: int) -> TwoForestDecomposition:
    p0 = _class_paths(g, col, 0)
    p1 = _class_paths(g, col, 1)
    if p0 is None or p1 is None or max(p0 + p1, default=0) > k:
        raise AssertionError("search returned an invalid decomposition")
    dec = TwoForestDecomposition(EdgeTwoColouring(col), (tuple(p0), tuple(p1)), k)
    check_path_invariants(g, dec)
    return dec


def check_path_invariants(g: SimpleGraph, dec: TwoForestDecomposition) -> None:
    """Each vertex ends exactly one path; there are n/2 paths of mean length 3."""
    col = dec.colouring.colours
    for v in range(g.n):
        d = Counter(col[e] for e in g.inc[v])
        if sorted(d.values()) != [1, 2]:
            raise AssertionError(f"vertex {v} has colour degrees {dict(d)}")
    paths = dec.paths[0] + dec.paths[1]
    if 2 * len(paths) != g.n:
        raise AssertionError(f"expected {g.n // 2} paths, found {len(paths)}")
    if sum(paths) != 3 * len(paths):
        raise AssertionError("mean path length is not 3")


def find_two_k_linear_forests(
    g: SimpleGraph, k: int, budget: Deadline | float | None = None
) -> TwoForestDecomposition | None:
    if k < 1:
        raise ValueError("k must be at least 1")
    for col in iter_edge_colourings(g, EdgeSearchOptions(max_length=k), budget):
        return _decomposition(g, col, k)
    return None


def find_two_isomorphic_k_linear_forests(
    g: SimpleGraph, k: int, budget: Deadline | float | None = None
) -> TwoForestDecomposition | None:
    if g.n % 4:
        raise ValueError("isomorphic halves need order divisible by 4")
    if k < 1:
        raise ValueError("k must be at least 1")
    opts = EdgeSearchOptions(max_length=k, isomorphic=True)
    for col in iter_edge_colourings(g, opts, budget):
        dec = _decomposition(g, col, k)
        if dec.paths[0] != dec.paths[1]:
            raise AssertionError("halves are not isomorphic")
        return dec
    return None


def linear_arboricity_at_most_two(g: SimpleGraph, k: int, budget: Deadline | float | None = None) -> bool:
    return find_two_k_linear_forests(g, k, budget) is not None


def iter_max4_edge_colourings(
    g: SimpleGraph, limit: int = 4, budget: Deadline | float | None = None, break_symmetry: bool = True
) -> Iterator[tuple[int, ...]]:
    """Edge 2-colourings with every monochromatic component of at most ``limit`` edges.

    Edges are coloured in a breadth-first order; one union-find per colour
    (no path compression, undone from a trail) tracks component edge counts.
    """
    deadline = as_deadline(budget)
    n, m = g.n, g.m
    order = _bfs_edge_order(g)
    parent = [list(range(n)), list(range(n))]
    size = [[1] * n, [1] * n]
    ecount = [[0] * n, [0] * n]
    colour = [-1] * m
    trail: list = []

    def find(c: int, x: int) -> int:
        p = parent[c]
        while p[x] != x:
            x = p[x]
        return x

    def add(e: int, c: int) -> bool:
        u, v = g.edges[e]
        ru, rv = find(c, u), find(c, v)
        if ru == rv:
            ecount[c][ru] += 1
            trail.append((c, ru, -1))
            return ecount[c][ru] <= limit
        if size[c][ru] > size[c][rv]:
            ru, rv = rv, ru
        parent[c][ru] = rv
        size[c][rv] += size[c][ru]
        ecount[c][rv] += ecount[c][ru] + 1
        trail.append((c, ru, rv))
        return ecount[c][rv] <= limit

    def undo() -> None:
        c, a, b = trail.pop()
        if b < 0:
            ecount[c][a] -= 1
        else:
            parent[c][a] = a
            size[c][b] -= size[c][a]
            ecount[c][b] -= ecount[c][a] + 1

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        deadline.tick()
        if i == m:
            yield tuple(colour)
            return
        e = order[i]
        choices = (0,) if (break_symmetry and i == 0) else (0, 1)
        for c in choices:
            colour[e] = c
            if add(e, c):
                yield from rec(i + 1)
            undo()
            colour[e] = -1

    yield from rec(0)


def _bfs_edge_order(g: SimpleGraph) -> list[int]:
    seen_e: set[int] = set()
    order = []
    seen_v = [False] * g.n
    for s in range(g.n):
        if seen_v[s]:
            continue
        seen_v[s] = True
        queue = [s]
        for x in queue:
            for e in g.inc[x]:
                if e not in seen_e:
                    seen_e.add(e)
                    order.append(e)
                y = g.other(e, x)
                if not seen_v[y]:
                    seen_v[y] = True
                    queue.append(y)
    return order


def component_edge_counts(g: SimpleGraph, col: tuple[int, ...]) -> tuple[list[int], list[int]]:
    out = []
    for c in (0, 1):
        parent = list(range(g.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        cnt: Counter = Counter()
        for e, (u, v) in enumerate(g.edges):
            if col[e] == c:
                parent[find(u)] = find(v)
        for e, (u, v) in enumerate(g.edges):
            if col[e] == c:
                cnt[find(u)] += 1
        out.append(sorted(cnt.values()))
    return out[0], out[1]


def find_two_colouring_max4_edge_components(
    g: SimpleGraph, budget: Deadline | float | None = None
) -> EdgeTwoColouring | None:
    for col in iter_max4_edge_colourings(g, 4, budget):
        a, b = component_edge_counts(g, col)
        if max(a + b, default=0) > 4:
            raise AssertionError("component bound violated")
        return EdgeTwoColouring(col)
    return None
