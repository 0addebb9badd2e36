"""k-bisections: verification, exhaustive search, and the 2-bisection of a
3-edge-colourable cubic graph."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

from .budget import Deadline, as_deadline
from .graphcore import SimpleGraph, is_proper_edge_colouring

B = 0
W = 1
COLOUR_NAMES = "BW"

Bisection = tuple[int, ...]


class Check(NamedTuple):
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class KBisectionWitness:
    colouring: Bisection
    k: int
    black_orders: tuple[int, ...]
    white_orders: tuple[int, ...]


def colour_classes(c: Sequence[int]) -> tuple[list[int], list[int]]:
    black = [v for v, x in enumerate(c) if x == B]
    white = [v for v, x in enumerate(c) if x == W]
    return black, white


def monochromatic_components(g: SimpleGraph, c: Sequence[int]) -> tuple[list[list[int]], list[list[int]]]:
    black, white = colour_classes(c)
    return g.induced_components(black), g.induced_components(white)


def _check_total(g: SimpleGraph, c: Sequence[int]) -> None:
    if len(c) != g.n:
        raise ValueError(f"colouring has {len(c)} entries for {g.n} vertices")
    bad = [v for v, x in enumerate(c) if x not in (B, W)]
    if bad:
        raise ValueError(f"vertex {bad[0]} has colour {c[bad[0]]!r}, expected 0 (B) or 1 (W)")


def verify_k_bisection(g: SimpleGraph, c: Sequence[int], k: int) -> Check:
    _check_total(g, c)
    black, white = colour_classes(c)
    if len(black) != len(white):
        return Check(False, f"unbalanced: |B|={len(black)}, |W|={len(white)}")
    for name, part in (("B", black), ("W", white)):
        for comp in g.induced_components(part):
            if len(comp) > k:
                return Check(False, f"{name} component {comp} has order {len(comp)} > {k}")
    return Check(True)


def witness(g: SimpleGraph, c: Sequence[int], k: int) -> KBisectionWitness:
    cb, cw = monochromatic_components(g, c)
    return KBisectionWitness(
        tuple(c), k, tuple(sorted(len(x) for x in cb)), tuple(sorted(len(x) for x in cw))
    )


def _component_size(adj, colour, v, c, limit) -> int:
    """Order of the colour-``c`` component at ``v`` among coloured vertices, stopping past ``limit``."""
    seen = {v}
    stack = [v]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if colour[y] == c and y not in seen:
                seen.add(y)
                if len(seen) > limit:
                    return len(seen)
                stack.append(y)
    return len(seen)


def iter_k_bisections(
    g: SimpleGraph, k: int, budget: Deadline | float | None = None, break_symmetry: bool = True
) -> Iterator[Bisection]:
    """All k-bisections in the fixed branching order.

    Branching picks the uncoloured vertex with the most coloured neighbours
    (ties to the smallest index) and tries B before W. With
    ``break_symmetry`` vertex 0 is fixed to B, so each bisection is produced
    once up to swapping the two colours.
    """
    deadline = as_deadline(budget)
    n = g.n
    if n % 2:
        return
    half = n // 2
    adj = g.adj
    colour = [-1] * n
    count = [0, 0]
    ncol = [0] * n  # coloured neighbours of each vertex

    def place(v: int, c: int) -> bool:
        colour[v] = c
        count[c] += 1
        for y in adj[v]:
            ncol[y] += 1
        if count[c] > half or _component_size(adj, colour, v, c, k) > k:
            return False
        return True

    def unplace(v: int) -> None:
        count[colour[v]] -= 1
        colour[v] = -1
        for y in adj[v]:
            ncol[y] -= 1

    def rec(left: int) -> Iterator[Bisection]:
        deadline.tick()
        if left == 0:
            yield tuple(colour)
            return
        best, score = -1, -1
        for v in range(n):
            if colour[v] < 0 and ncol[v] > score:
                best, score = v, ncol[v]
        for c in (B, W):
            if place(best, c):
                yield from rec(left - 1)
            unplace(best)

    if n == 0:
        yield ()
        return
    if break_symmetry:
        if place(0, B):
            yield from rec(n - 1)
        unplace(0)
    else:
        yield from rec(n)


def find_k_bisection(g: SimpleGraph, k: int, budget: Deadline | float | None = None) -> KBisectionWitness | None:
    if k < 1:
        raise ValueError("k must be at least 1")
    for c in iter_k_bisections(g, k, budget):
        return witness(g, c, k)
    return None


def two_bisection_from_3ec(g: SimpleGraph, ec: Sequence[int]) -> KBisectionWitness:
    """2-bisection from a proper 3-edge-colouring.

    Colour classes 0 and 1 form a 2-factor of even cycles; each cycle is
    coloured alternately starting with B at its smallest vertex.
    """
    if not is_proper_edge_colouring(g, ec) or any(x not in (0, 1, 2) for x in ec):
        raise ValueError("not a proper 3-edge-colouring")
    nxt: list[list[int]] = [[] for _ in range(g.n)]
    for e, (u, v) in enumerate(g.edges):
        if ec[e] in (0, 1):
            nxt[u].append(v)
            nxt[v].append(u)
    colour = [-1] * g.n
    for s in range(g.n):
        if colour[s] >= 0:
            continue
        colour[s] = B
        prev, cur, c = -1, s, B
        while True:
            a, b = nxt[cur]
            step = a if a != prev else b
            if step == s:
                break
            c ^= 1
            colour[step] = c
            prev, cur = cur, step
    result = tuple(colour)
    check = verify_k_bisection(g, result, 2)
    if not check:
        raise AssertionError(f"construction failed: {check.reason}")
    return witness(g, result, 2)


def isolated_counts(g: SimpleGraph, c: Sequence[int]) -> tuple[tuple[int, int], tuple[int, int]]:
    """(isolated vertices, isolated edges) in G[B] and in G[W]."""
    out = []
    for comps in monochromatic_components(g, c):
        out.append((sum(len(x) == 1 for x in comps), sum(len(x) == 2 for x in comps)))
    return out[0], out[1]


def brute_force_k_bisection_exists(g: SimpleGraph, k: int) -> bool:
    """Test oracle: try every balanced colouring with vertex 0 black."""
    from itertools import combinations

    n = g.n
    if n % 2:
        return False
    for rest in combinations(range(1, n), n // 2 - 1):
        black = {0, *rest}
        c = [B if v in black else W for v in range(n)]
        if verify_k_bisection(g, c, k):
            return True
    return False


def format_bisection(c: Iterable[int]) -> str:
    return "".join(COLOUR_NAMES[x] for x in c)
