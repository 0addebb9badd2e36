"""Backtracking over edge 2-colourings whose colour classes are linear forests.

Shared by the Wormald solvers and the linear-arboricity searches. Each
colour class keeps its path segments through an endpoint table: for an
endpoint ``a`` of a segment, ``other[c][a]`` is the far end and
``length[c][a]`` the edge count. Adding an edge either extends or joins
segments, and joining the two ends of one segment would close a cycle.

A segment is *closed* once neither end can take another edge of its
colour; closed lengths feed the optional checks (minimum length and the
requirement that both classes end with the same multiset of lengths).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator, Mapping

from .budget import Deadline, as_deadline
from .graphcore import SimpleGraph

UNCOLOURED = -1


@dataclass(frozen=True)
class EdgeSearchOptions:
    max_length: int | None = None
    min_length: int = 1
    isomorphic: bool = False
    skip: frozenset[int] = frozenset()  # edges left out of the colouring
    # per-vertex upper bounds on (colour-0 degree, colour-1 degree)
    caps: Mapping[int, tuple[int, int]] = field(default_factory=dict)
    break_symmetry: bool = True


def iter_edge_colourings(
    g: SimpleGraph, opts: EdgeSearchOptions, budget: Deadline | float | None = None
) -> Iterator[tuple[int, ...]]:
    """Colourings (edge index -> 0/1, skipped edges -1) meeting ``opts``.

    Every vertex has degree at most 2 in each class. With ``isomorphic``
    both classes have the same number of edges and equal path multisets.
    """
    deadline = as_deadline(budget)
    n, m = g.n, g.m
    edges = g.edges
    inc = g.inc
    skip = opts.skip
    todo = [e for e in range(m) if e not in skip]
    if opts.isomorphic and len(todo) % 2:
        return
    half = len(todo) // 2
    cap = [[2, 2] for _ in range(n)]
    for v, (a, b) in opts.caps.items():
        cap[v] = [min(2, a), min(2, b)]
    colour = [UNCOLOURED] * m
    deg = [[0, 0] for _ in range(n)]
    free = [0] * n  # uncoloured, non-skipped incident edges
    for e in todo:
        u, v = edges[e]
        free[u] += 1
        free[v] += 1
    for v in range(n):
        if free[v] > cap[v][0] + cap[v][1]:
            return
    other = [list(range(n)), list(range(n))]
    length = [[0] * n, [0] * n]
    used = [0, 0]
    closed = [Counter(), Counter()]
    nclosed = [0, 0]
    closed_keys: set = set()
    max_len = opts.max_length
    min_len = opts.min_length
    iso = opts.isomorphic
    trail: list = []

    def allowed(e: int) -> int:
        u, v = edges[e]
        mask = 0
        for c in (0, 1):
            if deg[u][c] < cap[u][c] and deg[v][c] < cap[v][c]:
                if not (iso and used[c] >= half):
                    mask |= 1 << c
        return mask

    def can_grow(w: int, c: int) -> bool:
        if deg[w][c] >= cap[w][c]:
            return False
        for e in inc[w]:
            if colour[e] == UNCOLOURED and e not in skip:
                x = edges[e][0] if edges[e][1] == w else edges[e][1]
                if deg[x][c] < cap[x][c]:
                    return True
        return False

    def check_closed(w: int, c: int) -> bool:
        """Register the c-segment at ``w`` if it is closed; False on a violation."""
        if deg[w][c] == 0 or deg[w][c] == 2:
            return True
        a = w
        b = other[c][w]
        key = (c, min(a, b), max(a, b))
        if key in closed_keys:
            return True
        if can_grow(a, c) or can_grow(b, c):
            return True
        L = length[c][a]
        if L < min_len:
            return False
        closed_keys.add(key)
        closed[c][L] += 1
        nclosed[c] += 1
        trail.append(("closed", key, L))
        if iso:
            d = 1 - c
            # lengths closed in c beyond those closed in d need open d-paths
            excess = sum(max(0, k - closed[d][l]) for l, k in closed[c].items())
            if excess > paths_left(d):
                return False
        return True

    total_paths = [None]

    def paths_left(d: int) -> int:
        # every path has two endpoints; each vertex with full degree 3 is the
        # endpoint of exactly one path, so the path total is known up front
        if total_paths[0] is None:
            return 10**9
        return total_paths[0] - nclosed[d]

    if iso:
        # a vertex with three coloured edges ends exactly one path, with one
        # edge exactly one; two edges forced into one colour end none
        ends = 0
        for v in range(n):
            d = sum(1 for e in inc[v] if e not in skip)
            if d in (1, 3):
                ends += 1
            elif d == 2:
                if min(cap[v]) > 0:
                    break
        else:
            if ends % 4 == 0:
                total_paths[0] = ends // 4

    def assign(e: int, c: int) -> bool:
        u, v = edges[e]
        colour[e] = c
        deg[u][c] += 1
        deg[v][c] += 1
        free[u] -= 1
        free[v] -= 1
        used[c] += 1
        a, b = other[c][u], other[c][v]
        if a == v:
            return False  # cycle
        la, lb = length[c][u], length[c][v]
        new_len = la + lb + 1
        trail.append(("seg", c, a, other[c][a], length[c][a], b, other[c][b], length[c][b]))
        other[c][a] = b
        other[c][b] = a
        length[c][a] = new_len
        length[c][b] = new_len
        if max_len is not None and new_len > max_len:
            return False
        for w in (u, v):
            for x in (0, 1):
                if not check_closed(w, x):
                    return False
        for w in (u, v):
            for f in inc[w]:
                if colour[f] == UNCOLOURED and f not in skip:
                    z = edges[f][0] if edges[f][1] == w else edges[f][1]
                    for x in (0, 1):
                        if not check_closed(z, x):
                            return False
        return True

    def unassign(e: int, mark: int) -> None:
        while len(trail) > mark:
            item = trail.pop()
            if item[0] == "seg":
                _, c, a, oa, la, b, ob, lb = item
                other[c][b] = ob
                length[c][b] = lb
                other[c][a] = oa
                length[c][a] = la
            else:
                _, key, L = item
                closed_keys.discard(key)
                c = key[0]
                closed[c][L] -= 1
                if not closed[c][L]:
                    del closed[c][L]
                nclosed[c] -= 1
        u, v = edges[e]
        c = colour[e]
        colour[e] = UNCOLOURED
        deg[u][c] -= 1
        deg[v][c] -= 1
        free[u] += 1
        free[v] += 1
        used[c] -= 1

    def final_ok() -> bool:
        for v in range(n):
            if deg[v][0] > cap[v][0] or deg[v][1] > cap[v][1]:
                return False
        lens = [Counter(), Counter()]
        for c in (0, 1):
            for a in range(n):
                if deg[a][c] == 1:
                    b = other[c][a]
                    if a < b:
                        lens[c][length[c][a]] += 1
        for c in (0, 1):
            if any(L < min_len for L in lens[c]):
                return False
            if max_len is not None and any(L > max_len for L in lens[c]):
                return False
        if iso and lens[0] != lens[1]:
            return False
        return True

    def rec(left: int) -> Iterator[tuple[int, ...]]:
        deadline.tick()
        if left == 0:
            if final_ok():
                yield tuple(colour)
            return
        best, best_mask, best_cnt = -1, 0, 3
        for e in todo:
            if colour[e] == UNCOLOURED:
                mask = allowed(e)
                cnt = (mask & 1) + (mask >> 1)
                if cnt < best_cnt:
                    best, best_mask, best_cnt = e, mask, cnt
                    if cnt <= 1:
                        break
        if best_cnt == 0:
            return
        for c in (0, 1):
            if best_mask >> c & 1:
                mark = len(trail)
                if assign(best, c):
                    yield from rec(left - 1)
                unassign(best, mark)

    if not todo:
        if final_ok():
            yield tuple(colour)
        return
    if opts.break_symmetry:
        first = todo[0]
        mark = len(trail)
        if allowed(first) & 1 and assign(first, 0):
            yield from rec(len(todo) - 1)
        unassign(first, mark)
    else:
        yield from rec(len(todo))
