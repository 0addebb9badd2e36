"""Canonical labelling by partition refinement plus individualisation.

The search tree is the usual one: refine to an equitable ordered partition,
individualise each vertex of the first smallest non-trivial cell, recurse.
Each node carries a refinement trace; leaves are ranked by (traces, code)
and the minimum adjacency code among best-trace leaves is canonical.
Subtrees are pruned on worse traces and on automorphism orbits found
from leaves with equal codes.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .graph import SimpleGraph
from .graph6 import write_graph6


def _refine(adj, cells):
    """Coarsest equitable refinement of an ordered partition.

    Returns ``(cells, trace)``. Splitting is driven only by cell positions,
    so the result commutes with relabelling.
    """
    n = len(adj)
    cell_of = [0] * n
    for i, c in enumerate(cells):
        for v in c:
            cell_of[v] = i
    trace = []
    while True:
        new_cells = []
        split = False
        for i, c in enumerate(cells):
            if len(c) == 1:
                new_cells.append(c)
                continue
            groups: dict = {}
            for v in c:
                key = tuple(sorted([cell_of[w] for w in adj[v]]))
                g = groups.get(key)
                if g is None:
                    groups[key] = [v]
                else:
                    g.append(v)
            if len(groups) == 1:
                new_cells.append(c)
            else:
                split = True
                keys = sorted(groups)
                trace.append((i, tuple((k, len(groups[k])) for k in keys)))
                for k in keys:
                    new_cells.append(groups[k])
        if not split:
            return cells, tuple(trace)
        cells = new_cells
        for i, c in enumerate(cells):
            for v in c:
                cell_of[v] = i


def walk_invariant(g: SimpleGraph, depth: int = 6) -> list[tuple[int, ...]]:
    """Per-vertex closed-walk counts of lengths 2..depth (an isomorphism invariant)."""
    n = g.n
    if n == 0:
        return []
    a = np.zeros((n, n), dtype=np.int64)
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1
    m = a.copy()
    cols = []
    for _ in range(2, depth + 1):
        m = m @ a
        cols.append(np.diagonal(m))
    return [tuple(r) for r in np.stack(cols, 1).tolist()]


def _code(edges, pos, n) -> int:
    top = n * (n - 1) // 2 - 1
    code = 0
    for u, v in edges:
        a = pos[u]
        b = pos[v]
        if a > b:
            a, b = b, a
        code |= 1 << (top - (b * (b - 1) // 2 + a))
    return code


class _Search:
    def __init__(self, g: SimpleGraph, colours: Sequence[int] | None):
        self.g = g
        self.adj = g.adj
        self.edges = g.edges
        self.n = g.n
        self.best_traces: list | None = None
        self.best_code: int | None = None
        self.best_lab: list[int] | None = None
        self.autos: list[list[int]] = []
        if colours is None:
            colours = walk_invariant(g)
        buckets: dict = {}
        for v in range(g.n):
            buckets.setdefault(colours[v], []).append(v)
        self.start = [buckets[k] for k in sorted(buckets)]

    def run(self):
        if self.n == 0:
            self.best_lab = []
            self.best_code = 0
            return
        cells, tr = _refine(self.adj, self.start)
        self._visit(cells, [tr], [])

    def _leaf(self, cells, traces):
        lab = [c[0] for c in cells]
        pos = [0] * self.n
        for i, v in enumerate(lab):
            pos[v] = i
        code = _code(self.edges, pos, self.n)
        if self.best_code is None or traces < self.best_traces or (
            traces == self.best_traces and code < self.best_code
        ):
            self.best_code = code
            self.best_traces = traces
            self.best_lab = lab
        elif traces == self.best_traces and code == self.best_code:
            # lab[i] -> best_lab[i] is an automorphism
            gamma = [0] * self.n
            for i, v in enumerate(lab):
                gamma[v] = self.best_lab[i]
            self.autos.append(gamma)

    def _orbit_rep(self, fixed, cand):
        """Union-find orbits of ``cand`` under stored automorphisms fixing ``fixed``."""
        parent = {v: v for v in cand}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a in self.autos:
            if all(a[f] == f for f in fixed):
                for v in cand:
                    w = a[v]
                    if w in parent:
                        rv, rw = find(v), find(w)
                        if rv != rw:
                            if rv < rw:
                                parent[rw] = rv
                            else:
                                parent[rv] = rw
        return find

    def _visit(self, cells, traces, fixed):
        if self.best_traces is not None and traces > self.best_traces[:len(traces)]:
            return
        if len(cells) == self.n:
            self._leaf(cells, traces)
            return
        target = None
        for i, c in enumerate(cells):
            if len(c) > 1 and (target is None or len(c) < len(cells[target])):
                target = i
        cell = cells[target]
        done: list[int] = []
        n_autos = -1
        find = None
        for v in sorted(cell):
            if done and self.autos:
                if n_autos != len(self.autos):
                    n_autos = len(self.autos)
                    find = self._orbit_rep(fixed, cell)
                rv = find(v)
                if any(find(u) == rv for u in done):
                    continue
            rest = [w for w in cell if w != v]
            child = cells[:target] + [[v], rest] + cells[target + 1:]
            child, tr = _refine(self.adj, child)
            self._visit(child, traces + [tr], fixed + [v])
            done.append(v)


def canonical_labelling(g: SimpleGraph, colours: Sequence[int] | None = None) -> tuple[list[int], list[list[int]]]:
    """Return ``(lab, automorphisms)``.

    ``lab[i]`` is the vertex placed at canonical position ``i``. The list of
    automorphisms (as vertex maps) is whatever the search discovered; it
    generates a subgroup of the automorphism group, not necessarily all of it.
    Optional ``colours`` restrict isomorphisms to colour-preserving ones.
    """
    s = _Search(g, colours)
    s.run()
    return s.best_lab, s.autos


def canonical_form(g: SimpleGraph, colours: Sequence[int] | None = None) -> SimpleGraph:
    lab, _ = canonical_labelling(g, colours)
    pos = [0] * g.n
    for i, v in enumerate(lab):
        pos[v] = i
    return SimpleGraph(g.n, sorted(tuple(sorted((pos[u], pos[v]))) for u, v in g.edges))


def canonical_code(g: SimpleGraph) -> bytes:
    """Isomorphism-complete code: graph6 of the canonical relabelling."""
    return write_graph6(canonical_form(g)).encode("ascii")


def are_isomorphic(g: SimpleGraph, h: SimpleGraph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    return canonical_code(g) == canonical_code(h)


def isomorphism(g: SimpleGraph, h: SimpleGraph) -> list[int] | None:
    """A vertex map ``phi`` with ``phi[v]`` in ``h`` for each ``v`` in ``g``, or None."""
    if g.n != h.n or g.m != h.m:
        return None
    lg, _ = canonical_labelling(g)
    lh, _ = canonical_labelling(h)
    pg = [0] * g.n
    for i, v in enumerate(lg):
        pg[v] = i
    phi = [lh[pg[v]] for v in range(g.n)]
    for u, v in g.edges:
        if not h.has_edge(phi[u], phi[v]):
            return None
    return phi
