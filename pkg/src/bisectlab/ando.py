"""Bisections with isomorphic parts, and the linear-forest variant."""

from __future__ import annotations

from collections import Counter
from typing import Sequence

from .bisection import (
    B,
    W,
    Bisection,
    _check_total,
    colour_classes,
    find_k_bisection,
    verify_k_bisection,
)
from .budget import Deadline, as_deadline
from .graphcore import SimpleGraph, component_signature, isomorphism
from .vsearch import VertexSearchOptions, iter_bisections

LinearForestSignature = tuple[int, ...]
PartSignature = tuple[bytes, ...]


class NotLinearForest(ValueError):
    def __init__(self, message: str, vertex: int):
        super().__init__(message)
        self.vertex = vertex


def linear_forest_signature(g: SimpleGraph, vertices) -> LinearForestSignature:
    """Sorted path lengths (edge counts) of the subgraph induced by ``vertices``."""
    vs = list(vertices)
    inside = set(vs)
    lengths = []
    for comp in g.induced_components(vs):
        edges = 0
        for v in comp:
            d = sum(1 for w in g.adj[v] if w in inside)
            if d > 2:
                raise NotLinearForest(f"vertex {v} has degree {d} in the induced subgraph", v)
            edges += d
        edges //= 2
        if edges != len(comp) - 1:
            raise NotLinearForest(f"component containing {min(comp)} has a cycle", min(comp))
        lengths.append(edges)
    return tuple(sorted(lengths))


def part_signatures(g: SimpleGraph, c: Sequence[int]) -> tuple[PartSignature, PartSignature]:
    black, white = colour_classes(c)
    return component_signature(g, black), component_signature(g, white)


def is_ando(g: SimpleGraph, c: Sequence[int]) -> bool:
    _check_total(g, c)
    black, white = colour_classes(c)
    if len(black) != len(white):
        return False
    return component_signature(g, black) == component_signature(g, white)


def _lf_or_none(g: SimpleGraph, vs) -> LinearForestSignature | None:
    try:
        return linear_forest_signature(g, vs)
    except NotLinearForest:
        return None


def is_strong_ando(g: SimpleGraph, c: Sequence[int]) -> bool:
    _check_total(g, c)
    black, white = colour_classes(c)
    if len(black) != len(white):
        return False
    sb = _lf_or_none(g, black)
    return sb is not None and sb == _lf_or_none(g, white)


def _deg2_key(g: SimpleGraph, vs: list[int]) -> Counter:
    """Isomorphism key for a max-degree-2 induced subgraph: (is cycle, order) per component."""
    inside = set(vs)
    key: Counter = Counter()
    for comp in g.induced_components(vs):
        edges = sum(1 for v in comp for w in g.adj[v] if w in inside) // 2
        key[(edges == len(comp), len(comp))] += 1
    return key


def find_ando(g: SimpleGraph, budget: Deadline | float | None = None) -> Bisection | None:
    """A bisection with isomorphic parts, or None after an exhaustive search.

    A 2-bisection is tried first (it always has isomorphic parts). The
    general search only visits bisections whose parts have maximum degree
    2, which loses nothing: any Ando bisection reduces to one of those.
    """
    deadline = as_deadline(budget)
    w = find_k_bisection(g, 2, deadline)
    if w is not None:
        return w.colouring
    for c in iter_bisections(g, VertexSearchOptions(max_degree=2), deadline):
        black, white = colour_classes(c)
        if _deg2_key(g, black) == _deg2_key(g, white):
            return c
    return None


def find_k_bisection_iso_linear_forests(
    g: SimpleGraph, k: int, budget: Deadline | float | None = None
) -> Bisection | None:
    """A k-bisection whose parts are isomorphic linear forests."""
    if k < 1:
        raise ValueError("k must be at least 1")
    opts = VertexSearchOptions(max_order=k, max_degree=2, acyclic=True)
    for c in iter_bisections(g, opts, budget):
        black, white = colour_classes(c)
        if linear_forest_signature(g, black) == linear_forest_signature(g, white):
            return c
    return None


def minimal_k_iso_linear_forests(g: SimpleGraph, budget: Deadline | float | None = None) -> int | None:
    """Smallest k with a k-bisection into isomorphic linear forests (None if none at all)."""
    deadline = as_deadline(budget)
    for k in range(1, g.n // 2 + 1):
        if find_k_bisection_iso_linear_forests(g, k, deadline) is not None:
            return k
    return None


def _part_degree(g: SimpleGraph, c: Sequence[int], v: int) -> int:
    return sum(1 for w in g.adj[v] if c[w] == c[v])


def reduce_to_max_degree_2(g: SimpleGraph, c: Sequence[int]) -> Bisection:
    """Switch colours until no vertex has all three neighbours in its own class.

    Take the smallest such vertex v1 (say black), map the black part onto
    the white part by an isomorphism, and swap colours of v1 and its image
    v2. Both become degree-0 vertices of the other class and the number of
    degree-3 vertices drops, so the loop terminates.
    """
    if not is_ando(g, c):
        raise ValueError("input colouring does not have isomorphic parts")
    col = list(c)
    while True:
        heavy = [v for v in range(g.n) if _part_degree(g, col, v) == 3]
        if not heavy:
            return tuple(col)
        before = len(heavy)
        v1 = heavy[0]
        own = [v for v in range(g.n) if col[v] == col[v1]]
        rest = [v for v in range(g.n) if col[v] != col[v1]]
        phi = isomorphism(g.induced_subgraph(own), g.induced_subgraph(rest))
        if phi is None:
            raise AssertionError("parts stopped being isomorphic")
        v2 = rest[phi[own.index(v1)]]
        col[v1], col[v2] = col[v2], col[v1]
        after = sum(1 for v in range(g.n) if _part_degree(g, col, v) == 3)
        if after >= before or not is_ando(g, col):
            raise AssertionError("switch did not reduce the number of degree-3 vertices")


def is_k_bisection_iso_linear_forests(g: SimpleGraph, c: Sequence[int], k: int) -> bool:
    return bool(verify_k_bisection(g, c, k)) and is_strong_ando(g, c)


__all__ = [
    "B",
    "W",
    "LinearForestSignature",
    "NotLinearForest",
    "PartSignature",
    "find_ando",
    "find_k_bisection_iso_linear_forests",
    "is_ando",
    "is_k_bisection_iso_linear_forests",
    "is_strong_ando",
    "linear_forest_signature",
    "minimal_k_iso_linear_forests",
    "part_signatures",
    "reduce_to_max_degree_2",
]
