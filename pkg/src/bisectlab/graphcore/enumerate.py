"""Isomorphism-free generation of cubic graphs.

Connected cubic graphs of order n come from order n-2 by *edge insertion*
(subdivide two distinct edges, join the two new vertices), where the parent
may also be a two-component graph joined through the new edge. The few
graphs where no edge can be reduced (rings of diamonds) come from order n-4
by replacing an edge with a diamond. Duplicates are removed by canonical code.

To keep the number of canonical labellings down, a child made by edge
insertion is kept only if its new edge has the largest cheap local invariant
among all reducible edges of the child. That filter is invariant under
isomorphism, so every class still survives through its best edge.

Results are cached as graph6 files, one per order.
"""

from __future__ import annotations

import logging
import os
from functools import lru_cache
from itertools import combinations
from pathlib import Path
from typing import Iterator

from .canon import canonical_code, canonical_form
from .graph import CubicGraph, SimpleGraph, disjoint_union
from .graph6 import parse_graph6, write_graph6

log = logging.getLogger(__name__)

DEFAULT_CEILING = 20


def cache_dir() -> Path:
    d = os.environ.get("BISECTLAB_CACHE")
    p = Path(d) if d else Path.home() / ".cache" / "bisectlab"
    return p


def _edge_invariant(nb: list[set[int]], a: int, b: int) -> tuple[int, int, int]:
    """Triangles, 4-cycles and 5-cycles through edge ``ab``."""
    na = nb[a] - {b}
    nbb = nb[b] - {a}
    tri = len(na & nbb)
    sq = 0
    pent = 0
    for x in na:
        nx_ = nb[x]
        for y in nbb:
            if x == y:
                continue
            if y in nx_:
                sq += 1
            for z in nx_ & nb[y]:
                if z != a and z != b:
                    pent += 1
    return tri, sq, pent


def _reducible(nb: list[set[int]], a: int, b: int) -> bool:
    """Does removing ``ab`` and suppressing a, b leave a simple cubic graph?

    The result has at most two components (two exactly when ``ab`` is a
    bridge), which is why two-component parents are part of the generation.
    """
    xa = tuple(nb[a] - {b})
    yb = tuple(nb[b] - {a})
    if set(xa) == set(yb):
        return False
    return xa[1] not in nb[xa[0]] and yb[1] not in nb[yb[0]]


def _insert_edge(g: SimpleGraph, e: int, f: int) -> tuple[list[set[int]], int, int]:
    n = g.n
    x, y = n, n + 1
    nb = [set(a) for a in g.adj] + [set(), set()]
    for (u, v), w in ((g.edges[e], x), (g.edges[f], y)):
        nb[u].discard(v)
        nb[v].discard(u)
        nb[u].add(w)
        nb[v].add(w)
        nb[w].update((u, v))
    nb[x].add(y)
    nb[y].add(x)
    return nb, x, y


def _keeps(nb: list[set[int]], x: int, y: int) -> bool:
    best = _edge_invariant(nb, x, y)
    for a in range(len(nb)):
        for b in nb[a]:
            if b <= a or (a == x and b == y):
                continue
            if _edge_invariant(nb, a, b) > best and _reducible(nb, a, b):
                return False
    return True


def _parents(n: int) -> Iterator[tuple[SimpleGraph, int]]:
    """Cubic graphs of order n with one or two components.

    For two components the second number is the first edge index of the
    second component (insertions must join the two), otherwise 0.
    """
    for g in connected_cubic(n):
        yield g, 0
    for p in range(4, n // 2 + 1, 2):
        left = connected_cubic(p)
        right = connected_cubic(n - p)
        for i, a in enumerate(left):
            for j, b in enumerate(right):
                if p == n - p and j < i:
                    continue
                yield disjoint_union(a, b), a.m


def _to_graph(nb: list[set[int]]) -> CubicGraph:
    return CubicGraph(len(nb), [(a, b) for a in range(len(nb)) for b in nb[a] if a < b])


def _diamond_children(g: SimpleGraph) -> Iterator[CubicGraph]:
    n = g.n
    for (u, v) in g.edges:
        d1, m1, m2, d2 = n, n + 1, n + 2, n + 3
        edges = [e for e in g.edges if e != (u, v)]
        edges += [(u, d1), (d1, m1), (d1, m2), (m1, m2), (m1, d2), (m2, d2), (d2, v)]
        yield CubicGraph(n + 4, edges)


def _irreducible(g: SimpleGraph) -> bool:
    nb = [set(a) for a in g.adj]
    return not any(_reducible(nb, a, b) for a, b in g.edges)


def _generate_connected(n: int) -> list[CubicGraph]:
    if n == 4:
        return [CubicGraph(4, combinations(range(4), 2))]
    if n < 4:
        return []
    found: dict[bytes, CubicGraph] = {}
    for parent, split in _parents(n - 2):
        m = parent.m
        for e in range(m):
            for f in range(max(e + 1, split), m):
                if split and e >= split:
                    break
                nb, x, y = _insert_edge(parent, e, f)
                if not _keeps(nb, x, y):
                    continue
                child = _to_graph(nb)
                code = canonical_code(child)
                if code not in found:
                    found[code] = child
    if n >= 8:
        for parent in connected_cubic(n - 4):
            for child in _diamond_children(parent):
                if _irreducible(child):
                    code = canonical_code(child)
                    if code not in found:
                        found[code] = child
    return [CubicGraph.from_graph(parse_graph6(code.decode())) for code in sorted(found)]


@lru_cache(maxsize=None)
def _connected_cached(n: int) -> tuple[CubicGraph, ...]:
    path = cache_dir() / f"cubic_connected_{n:02d}.g6"
    if path.exists():
        with path.open() as fh:
            return tuple(CubicGraph.from_graph(parse_graph6(line)) for line in fh if line.strip())
    log.info("generating connected cubic graphs of order %d", n)
    graphs = _generate_connected(n)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        tmp.write_text("".join(write_graph6(g) + "\n" for g in graphs))
        tmp.replace(path)
    except OSError as exc:  # read-only home etc.
        log.warning("could not write cache %s: %s", path, exc)
    return tuple(graphs)


def connected_cubic(n: int) -> tuple[CubicGraph, ...]:
    if n % 2 or n < 0:
        return ()
    return _connected_cached(n)


def _partitions(n: int, smallest: int) -> Iterator[list[int]]:
    """Non-decreasing lists of even parts >= ``smallest`` (and >= 4) summing to n."""
    if n == 0:
        yield []
        return
    for p in range(max(smallest, 4), n + 1, 2):
        for rest in _partitions(n - p, p):
            yield [p] + rest


def _multisets(items: list, k: int, start: int = 0) -> Iterator[list]:
    if k == 0:
        yield []
        return
    for i in range(start, len(items)):
        for rest in _multisets(items, k - 1, i):
            yield [items[i]] + rest


def _all_cubic(n: int) -> list[CubicGraph]:
    out: dict[bytes, CubicGraph] = {}
    for parts in _partitions(n, 4):
        counts: dict[int, int] = {}
        for p in parts:
            counts[p] = counts.get(p, 0) + 1
        choices = [list(_multisets(list(connected_cubic(p)), c)) for p, c in sorted(counts.items())]

        def rec(i: int, acc: list[SimpleGraph]):
            if i == len(choices):
                g = CubicGraph.from_graph(canonical_form(disjoint_union(*acc)))
                out[canonical_code(g)] = g
                return
            for combo in choices[i]:
                rec(i + 1, acc + combo)

        rec(0, [])
    return [out[k] for k in sorted(out)]


def enumerate_cubic(n: int, connected_only: bool = True, ceiling: int = DEFAULT_CEILING) -> Iterator[CubicGraph]:
    """One graph per isomorphism class, in order of canonical code."""
    if n % 2:
        raise ValueError(f"cubic graphs need an even order, got {n}")
    if n > ceiling:
        raise ValueError(f"order {n} above the enumeration ceiling {ceiling}")
    if n < 4:
        return iter(())
    if connected_only:
        return iter(connected_cubic(n))
    return iter(_all_cubic(n))
