"""Wormald and Strong Wormald edge 2-colourings.

A Wormald colouring splits the edges into two isomorphic linear forests.
The strong form also forbids paths with a single edge. For orders 2 mod 4
one edge xy stays uncoloured, x meets two white edges and y two black.

Two independent searches are provided. The direct one colours edges. The
bisection method walks vertex bisections and keeps those that pass four
tests in this order: parts are linear forests, each part has the right
edge budget, the parts are isomorphic, and every component of the
bichromatic subgraph has as many edges as vertices (one tree allowed for
orders 2 mod 4). A passing bisection is turned back into an edge colouring.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterator, Sequence

from .ando import linear_forest_signature, NotLinearForest
from .bisection import B, W, Bisection, colour_classes
from .budget import Deadline, as_deadline
from .esearch import EdgeSearchOptions, iter_edge_colourings
from .graphcore import SimpleGraph
from .vsearch import VertexSearchOptions, iter_bisections

UNCOLOURED = -1


@dataclass(frozen=True)
class EdgeTwoColouring:
    """Edge index -> B (0) / W (1); ``UNCOLOURED`` for edges left out."""

    colours: tuple[int, ...]

    @property
    def uncoloured(self) -> tuple[int, ...]:
        return tuple(e for e, c in enumerate(self.colours) if c == UNCOLOURED)

    def format(self, g: SimpleGraph) -> str:
        out = []
        for e, (u, v) in enumerate(g.edges):
            c = self.colours[e]
            out.append(f"{u}-{v}:{'BW'[c] if c >= 0 else '-'}")
        return " ".join(out)


@dataclass(frozen=True)
class PairRemovedResult:
    e: int
    f: int
    colouring: EdgeTwoColouring
    shared_vertex: bool


@dataclass(frozen=True)
class GPrimeComponent:
    vertices: tuple[int, ...]
    n_edges: int
    kind: str  # "tree", "tree-plus-edge" or "other"


@dataclass(frozen=True)
class GPrimeDecomposition:
    components: tuple[GPrimeComponent, ...]

    def counts(self) -> Counter:
        return Counter(c.kind for c in self.components)


# ------------------------------------------------------------------ checks

def _class_paths(g: SimpleGraph, colours: Sequence[int], c: int) -> list[int] | None:
    """Path lengths of colour class ``c``, or None if it is not a linear forest."""
    deg = [0] * g.n
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for e, (u, v) in enumerate(g.edges):
        if colours[e] == c:
            deg[u] += 1
            deg[v] += 1
            adj[u].append(v)
            adj[v].append(u)
    if max(deg, default=0) > 2:
        return None
    seen = [False] * g.n
    lengths = []
    for s in range(g.n):
        if seen[s] or deg[s] == 0:
            continue
        stack = [s]
        seen[s] = True
        verts = 0
        edges = 0
        while stack:
            x = stack.pop()
            verts += 1
            edges += deg[x]
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        edges //= 2
        if edges != verts - 1:
            return None
        lengths.append(edges)
    return sorted(lengths)


def _order_class(g: SimpleGraph) -> int:
    if g.n % 2:
        raise ValueError("cubic graphs have even order")
    return g.n % 4


def _wormald_parts(g: SimpleGraph, ec: EdgeTwoColouring) -> tuple[list[int], list[int]] | None:
    pb = _class_paths(g, ec.colours, B)
    pw = _class_paths(g, ec.colours, W)
    if pb is None or pw is None or pb != pw:
        return None
    return pb, pw


def verify_wormald(g: SimpleGraph, ec: EdgeTwoColouring) -> bool:
    if _order_class(g) != 0:
        raise ValueError("Wormald colourings need order divisible by 4")
    if len(ec.colours) != g.m:
        raise ValueError("colouring size does not match edge count")
    if ec.uncoloured:
        raise ValueError("Wormald colourings colour every edge")
    return _wormald_parts(g, ec) is not None


def _endpoint_ok(g: SimpleGraph, colours: Sequence[int], x: int, y: int) -> bool:
    """x meets two white edges and y two black ones."""
    cx = [colours[e] for e in g.inc[x] if colours[e] != UNCOLOURED]
    cy = [colours[e] for e in g.inc[y] if colours[e] != UNCOLOURED]
    return cx.count(W) == 2 and cy.count(B) == 2


def verify_strong_wormald(g: SimpleGraph, ec: EdgeTwoColouring) -> bool:
    if len(ec.colours) != g.m:
        raise ValueError("colouring size does not match edge count")
    r = _order_class(g)
    un = ec.uncoloured
    if r == 0 and un:
        raise ValueError("orders 0 mod 4 colour every edge")
    if r == 2:
        if len(un) != 1:
            raise ValueError("orders 2 mod 4 leave exactly one edge uncoloured")
        x, y = g.edges[un[0]]
        if not (_endpoint_ok(g, ec.colours, x, y) or _endpoint_ok(g, ec.colours, y, x)):
            return False
    parts = _wormald_parts(g, ec)
    return parts is not None and min(parts[0], default=2) >= 2


def verify_pair_removed(g: SimpleGraph, e: int, f: int, ec: EdgeTwoColouring) -> bool:
    if set(ec.uncoloured) != {e, f}:
        return False
    for h in (e, f):
        x, y = g.edges[h]
        if not (_endpoint_ok(g, ec.colours, x, y) or _endpoint_ok(g, ec.colours, y, x)):
            return False
    parts = _wormald_parts(g, ec)
    return parts is not None and min(parts[0], default=2) >= 2


def ando_from_wormald(g: SimpleGraph, ec: EdgeTwoColouring) -> Bisection:
    """Colour each vertex by the colour of its two same-coloured edges."""
    if not verify_strong_wormald(g, ec):
        raise ValueError("not a Strong Wormald colouring")
    out = []
    for v in range(g.n):
        cs = [ec.colours[e] for e in g.inc[v] if ec.colours[e] != UNCOLOURED]
        out.append(B if cs.count(B) >= 2 else W)
    return tuple(out)


# ------------------------------------------------------------------ G'

def gprime_decomposition(g: SimpleGraph, c: Sequence[int]) -> GPrimeDecomposition:
    """Components of the spanning subgraph of bichromatic edges."""
    if len(c) != g.n:
        raise ValueError("colouring size does not match vertex count")
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in g.edges:
        if c[u] != c[v]:
            adj[u].append(v)
            adj[v].append(u)
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        stack = [s]
        verts = []
        deg_sum = 0
        while stack:
            x = stack.pop()
            verts.append(x)
            deg_sum += len(adj[x])
            for y in adj[x]:
                if c[y] == c[x]:
                    raise AssertionError("bichromatic subgraph is not bipartite")
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        ne = deg_sum // 2
        kind = "tree" if ne == len(verts) - 1 else "tree-plus-edge" if ne == len(verts) else "other"
        comps.append(GPrimeComponent(tuple(sorted(verts)), ne, kind))
    return GPrimeDecomposition(tuple(comps))


def _passes_conditions(g: SimpleGraph, c: Sequence[int]) -> bool:
    """The four bisection conditions, tested in order."""
    black, white = colour_classes(c)
    try:
        sb = linear_forest_signature(g, black)
        sw = linear_forest_signature(g, white)
    except NotLinearForest:
        return False
    budget = g.m // 2
    if sum(l + 2 for l in sb) != budget or sum(l + 2 for l in sw) != budget:
        return False
    if sb != sw:
        return False
    counts = gprime_decomposition(g, c).counts()
    if counts["other"]:
        return False
    return counts["tree"] == (1 if g.n % 4 == 2 else 0)


def reconstructions(g: SimpleGraph, c: Sequence[int]) -> Iterator[EdgeTwoColouring]:
    """All edge colourings rebuilt from a qualifying bisection.

    Monochromatic edges take their ends' colour. Each unicyclic component
    of the bichromatic subgraph is oriented around its cycle (two ways)
    and away from it elsewhere; in the tree component the smallest edge is
    left uncoloured and each side is oriented away from its end of it. An
    oriented edge takes the colour of its tail. Orientation vectors come
    in lexicographic order, 0 = forward along the cycle as first found.
    """
    colours = [UNCOLOURED] * g.m
    for e, (u, v) in enumerate(g.edges):
        if c[u] == c[v]:
            colours[e] = c[u]
    dec = gprime_decomposition(g, c)
    plans = []  # per unicyclic component: (cycle edge ids in order, tree-edge orientation base)
    fixed: dict[int, int] = {}
    for comp in dec.components:
        vs = set(comp.vertices)
        cedges = [e for e, (u, v) in enumerate(g.edges) if u in vs and v in vs and c[u] != c[v]]
        if comp.kind == "tree":
            skip = min(cedges)
            x, y = g.edges[skip]
            rest = [e for e in cedges if e != skip]
            for e, tail in _orient_from_roots(g, rest, [x, y]):
                fixed[e] = c[tail]
        elif comp.kind == "tree-plus-edge":
            cycle = _unique_cycle(g, cedges)
            plans.append((cedges, cycle))
        else:
            return
    for choice in product((0, 1), repeat=len(plans)):
        col = list(colours)
        for e, t in fixed.items():
            col[e] = t
        for (cedges, cycle), d in zip(plans, choice):
            seq = cycle if d == 0 else [(v, u) for u, v in reversed(cycle)]
            roots = []
            for u, v in seq:
                col[g.edge_id(u, v)] = c[u]
                roots.append(v)
            cyc_ids = {g.edge_id(u, v) for u, v in cycle}
            rest = [e for e in cedges if e not in cyc_ids]
            for e, tail in _orient_from_roots(g, rest, roots):
                col[e] = c[tail]
        yield EdgeTwoColouring(tuple(col))


def _orient_from_roots(g: SimpleGraph, edges: list[int], roots: list[int]) -> list[tuple[int, int]]:
    """Orient a forest of ``edges`` away from ``roots``; returns (edge, tail)."""
    adj: dict[int, list[tuple[int, int]]] = {}
    for e in edges:
        u, v = g.edges[e]
        adj.setdefault(u, []).append((v, e))
        adj.setdefault(v, []).append((u, e))
    out = []
    seen = set(roots)
    stack = list(roots)
    used = set()
    while stack:
        x = stack.pop()
        for y, e in adj.get(x, ()):
            if e in used:
                continue
            used.add(e)
            out.append((e, x))
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return out


def _unique_cycle(g: SimpleGraph, edges: list[int]) -> list[tuple[int, int]]:
    """The cycle of a unicyclic edge set as a directed vertex-pair sequence."""
    deg: Counter = Counter()
    adj: dict[int, set[int]] = {}
    for e in edges:
        u, v = g.edges[e]
        deg[u] += 1
        deg[v] += 1
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    leaves = [v for v, d in deg.items() if d == 1]
    while leaves:
        x = leaves.pop()
        for y in adj[x]:
            adj[y].discard(x)
            deg[y] -= 1
            if deg[y] == 1:
                leaves.append(y)
        adj[x] = set()
        deg[x] = 0
    core = sorted(v for v, d in deg.items() if d == 2)
    start = core[0]
    seq = []
    prev, cur = None, start
    while True:
        nxt = min(w for w in adj[cur] if w != prev) if prev is not None else min(adj[cur])
        seq.append((cur, nxt))
        prev, cur = cur, nxt
        if cur == start:
            return seq


def reconstruct(g: SimpleGraph, c: Sequence[int]) -> EdgeTwoColouring | None:
    """The first reconstruction, verified."""
    for ec in reconstructions(g, c):
        if not verify_strong_wormald(g, ec):
            raise AssertionError("reconstruction did not verify")
        return ec
    return None


# ------------------------------------------------------------------ solvers

def _strong_vertex_options(g: SimpleGraph) -> VertexSearchOptions:
    per_part = g.n - g.m // 2  # monochromatic edges per part
    return VertexSearchOptions(
        max_degree=2,
        acyclic=True,
        max_mono_edges=per_part,
        gprime_trees=1 if g.n % 4 == 2 else 0,
    )


def iter_strong_wormald_bisections(
    g: SimpleGraph, budget: Deadline | float | None = None
) -> Iterator[Bisection]:
    """Bisections passing the four conditions (one per colour-swap pair)."""
    _order_class(g)
    for c in iter_bisections(g, _strong_vertex_options(g), budget):
        if _passes_conditions(g, c):
            yield c


def find_strong_wormald_bisection_method(
    g: SimpleGraph, budget: Deadline | float | None = None
) -> EdgeTwoColouring | None:
    for c in iter_strong_wormald_bisections(g, budget):
        ec = reconstruct(g, c)
        if ec is not None:
            return ec
    return None


def find_strong_wormald_direct(
    g: SimpleGraph, budget: Deadline | float | None = None
) -> EdgeTwoColouring | None:
    deadline = as_deadline(budget)
    r = _order_class(g)
    if r == 0:
        opts = EdgeSearchOptions(min_length=2, isomorphic=True)
        for col in iter_edge_colourings(g, opts, deadline):
            ec = EdgeTwoColouring(col)
            if verify_strong_wormald(g, ec):
                return ec
        return None
    for e in range(g.m):
        for x, y in (g.edges[e], g.edges[e][::-1]):
            ec = _with_removed(g, [(e, x, y)], deadline)
            if ec is not None:
                return ec
    return None


def _with_removed(g: SimpleGraph, removed: list[tuple[int, int, int]], deadline: Deadline) -> EdgeTwoColouring | None:
    """Colouring with the given edges left out; per removed edge x takes white, y black."""
    caps: dict[int, tuple[int, int]] = {}
    for _, x, y in removed:
        if x in caps or y in caps:
            # a vertex at two removed edges keeps one coloured edge, so it can
            # never meet two edges of one colour
            return None
        caps[x] = (0, 2)
        caps[y] = (2, 0)
    opts = EdgeSearchOptions(
        min_length=2,
        isomorphic=True,
        skip=frozenset(e for e, _, _ in removed),
        caps=caps,
        break_symmetry=False,
    )
    for col in iter_edge_colourings(g, opts, deadline):
        return EdgeTwoColouring(col)
    return None


def find_wormald(g: SimpleGraph, budget: Deadline | float | None = None) -> EdgeTwoColouring | None:
    if _order_class(g) != 0:
        raise ValueError("Wormald colourings need order divisible by 4")
    opts = EdgeSearchOptions(isomorphic=True)
    for col in iter_edge_colourings(g, opts, budget):
        ec = EdgeTwoColouring(col)
        if verify_wormald(g, ec):
            return ec
    return None


def find_pair_removed_strong_wormald(
    g: SimpleGraph, budget: Deadline | float | None = None, allow_shared: bool = True
) -> PairRemovedResult | None:
    """Edges e < f and a Strong Wormald colouring of the rest, with the
    endpoint condition at both removed edges.

    Pairs are tried in lexicographic order, each with all four endpoint
    orientations. Pairs sharing a vertex are included when ``allow_shared``;
    the shared vertex keeps a single coloured edge and so can never satisfy
    the endpoint condition, which the search confirms rather than assumes.
    """
    if _order_class(g) != 0:
        raise ValueError("the pair variant is for orders divisible by 4")
    deadline = as_deadline(budget)
    for e, f in combinations(range(g.m), 2):
        shared = bool(set(g.edges[e]) & set(g.edges[f]))
        if shared and not allow_shared:
            continue
        for ex, ey in (g.edges[e], g.edges[e][::-1]):
            for fx, fy in (g.edges[f], g.edges[f][::-1]):
                ec = _with_removed(g, [(e, ex, ey), (f, fx, fy)], deadline)
                if ec is not None:
                    if not verify_pair_removed(g, e, f, ec):
                        raise AssertionError("pair-removed colouring did not verify")
                    return PairRemovedResult(e, f, ec, shared)
    return None


def find_strong_wormald(
    g: SimpleGraph, method: str = "bisection", budget: Deadline | float | None = None
) -> EdgeTwoColouring | None:
    if method == "bisection":
        return find_strong_wormald_bisection_method(g, budget)
    if method == "direct":
        return find_strong_wormald_direct(g, budget)
    raise ValueError(f"unknown method {method!r}")
