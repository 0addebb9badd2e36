"""Backtracking over balanced vertex 2-colourings with incremental pruning.

One engine serves several searches. Every constraint is monotone along a
branch (it can only get worse as more vertices are coloured), so checking
it after each placement is sound:

* order of a monochromatic component at most ``max_order``;
* degree inside a monochromatic component at most ``max_degree``;
* monochromatic components acyclic;
* at most ``max_mono_edges`` monochromatic edges per colour;
* components of the bichromatic subgraph have at most as many edges as
  vertices, and a finished component with fewer edges (a tree) is allowed
  only ``gprime_trees`` times.

Union-find structures are kept without path compression so every union
can be undone from a trail.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .budget import Deadline, as_deadline
from .graphcore import SimpleGraph

B = 0
W = 1


@dataclass(frozen=True)
class VertexSearchOptions:
    max_order: int | None = None
    max_degree: int | None = None
    acyclic: bool = False
    max_mono_edges: int | None = None
    gprime_trees: int | None = None  # None: no bichromatic-subgraph check


class _UF:
    __slots__ = ("parent", "size", "edges", "pending", "trail")

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self.edges = [0] * n
        self.pending = [0] * n
        self.trail: list = []

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            x = p[x]
        return x

    def mark(self) -> int:
        return len(self.trail)

    def undo(self, mark: int) -> None:
        t = self.trail
        while len(t) > mark:
            kind, a, b = t.pop()
            if kind == 0:  # union: a was attached under b
                self.parent[a] = a
                self.size[b] -= self.size[a]
                self.edges[b] -= self.edges[a]
                self.pending[b] -= self.pending[a]
            elif kind == 1:
                self.edges[a] -= b
            else:
                self.pending[a] -= b

    def add_edges(self, r: int, k: int) -> None:
        self.edges[r] += k
        self.trail.append((1, r, k))

    def add_pending(self, r: int, k: int) -> None:
        self.pending[r] += k
        self.trail.append((2, r, k))

    def union(self, a: int, b: int) -> int:
        """Union of two distinct roots, returns the new root."""
        if self.size[a] > self.size[b]:
            a, b = b, a
        self.parent[a] = b
        self.size[b] += self.size[a]
        self.edges[b] += self.edges[a]
        self.pending[b] += self.pending[a]
        self.trail.append((0, a, b))
        return b


def iter_bisections(
    g: SimpleGraph,
    opts: VertexSearchOptions,
    budget: Deadline | float | None = None,
    break_symmetry: bool = True,
) -> Iterator[tuple[int, ...]]:
    """Balanced colourings passing every enabled check, in a fixed order.

    Branching picks the uncoloured vertex with most coloured neighbours
    (ties to the smallest index), B before W. With ``break_symmetry``
    vertex 0 is black, so each colouring appears once up to a colour swap;
    only use it when the searched property is swap-invariant.
    """
    deadline = as_deadline(budget)
    n = g.n
    if n % 2:
        return
    if n == 0:
        yield ()
        return
    half = n // 2
    adj = g.adj
    colour = [-1] * n
    count = [0, 0]
    ncol = [0] * n
    mdeg = [0] * n
    mono_edges = [0, 0]
    mono = _UF(n)
    gp = _UF(n) if opts.gprime_trees is not None else None
    trees = [0]
    max_order = opts.max_order
    max_degree = opts.max_degree
    acyclic = opts.acyclic
    max_mono = opts.max_mono_edges
    tree_cap = opts.gprime_trees

    def place(v: int, c: int) -> tuple[bool, tuple]:
        """Colour v; returns (ok, undo token). Undo must be called even if not ok."""
        m1 = mono.mark()
        m2 = gp.mark() if gp is not None else 0
        saved_trees = trees[0]
        colour[v] = c
        count[c] += 1
        touched = []
        added = 0
        for y in adj[v]:
            ncol[y] += 1
        token = (m1, m2, saved_trees, touched)
        if count[c] > half:
            return False, token
        ok = True
        rv = v
        for y in adj[v]:
            cy = colour[y]
            if cy != c:
                continue
            mdeg[v] += 1
            mdeg[y] += 1
            touched.append(y)
            added += 1
            ry = mono.find(y)
            if ry == rv:
                if acyclic:
                    ok = False
                mono.add_edges(rv, 1)
            else:
                rv = mono.union(rv, ry)
                mono.add_edges(rv, 1)
        mono_edges[c] += added
        token = (m1, m2, saved_trees, touched, added, c)
        if not ok:
            return False, token
        if max_degree is not None:
            if mdeg[v] > max_degree or any(mdeg[y] > max_degree for y in touched):
                return False, token
        if max_mono is not None and mono_edges[c] > max_mono:
            return False, token
        if max_order is not None and mono.size[rv] > max_order:
            return False, token
        if gp is not None:
            # bichromatic subgraph bookkeeping
            r = gp.find(v)
            unc = sum(1 for y in adj[v] if colour[y] < 0)
            gp.add_pending(r, unc)
            for y in adj[v]:
                cy = colour[y]
                if cy < 0:
                    continue
                ry = gp.find(y)
                gp.add_pending(ry, -1)
                if cy != c:
                    r = gp.find(v)
                    if ry != r:
                        r = gp.union(r, ry)
                    gp.add_edges(r, 1)
            seen = set()
            for x in (v, *adj[v]):
                if colour[x] < 0:
                    continue
                rx = gp.find(x)
                if rx in seen:
                    continue
                seen.add(rx)
                if gp.edges[rx] > gp.size[rx]:
                    return False, token
                if gp.pending[rx] == 0 and gp.edges[rx] < gp.size[rx]:
                    trees[0] += 1
                    if trees[0] > tree_cap:
                        return False, token
        return True, token

    def unplace(v: int, token: tuple) -> None:
        m1, m2, saved_trees = token[0], token[1], token[2]
        c = colour[v]
        if len(token) > 4:
            touched, added = token[3], token[4]
            for y in touched:
                mdeg[y] -= 1
            mdeg[v] -= len(touched)
            mono_edges[c] -= added
        mono.undo(m1)
        if gp is not None:
            gp.undo(m2)
        trees[0] = saved_trees
        count[c] -= 1
        colour[v] = -1
        for y in adj[v]:
            ncol[y] -= 1

    def rec(left: int) -> Iterator[tuple[int, ...]]:
        deadline.tick()
        if left == 0:
            yield tuple(colour)
            return
        best, score = -1, -1
        for v in range(n):
            if colour[v] < 0 and ncol[v] > score:
                best, score = v, ncol[v]
        for c in (B, W):
            ok, tok = place(best, c)
            if ok:
                yield from rec(left - 1)
            unplace(best, tok)

    if break_symmetry:
        ok, tok = place(0, B)
        if ok:
            yield from rec(n - 1)
        unplace(0, tok)
    else:
        yield from rec(n)
