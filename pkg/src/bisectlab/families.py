"""Named graphs and graph families.

Module layouts (ladder modules, kernel gadgets, the E1 chain family) are
stored as small generator functions. Each builder validates what it
produces: degrees, orders, and for families a few structural facts, so a
wiring mistake fails at build time.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .bisection import B, W, verify_k_bisection
from .graphcore import CubicGraph, GraphError, SimpleGraph, are_isomorphic

FAMILY_NAMES = (
    "L", "T", "kernel", "Tkernel", "E1", "V1", "G",
    "petersen", "heawood", "K4", "K33", "prism", "triangle-K33", "no-pm-16",
)


@dataclass(frozen=True)
class Module:
    """A subgraph with designated attachment vertices (degree < 3 inside)."""

    graph: SimpleGraph
    attachments: tuple[int, ...]


def _check_degrees(g: SimpleGraph, attachments: Sequence[int], label: str) -> None:
    want = [3] * g.n
    for a in attachments:
        want[a] -= 1
    for v in range(g.n):
        if g.degree(v) != want[v]:
            raise GraphError(f"{label}: vertex {v} has degree {g.degree(v)}, expected {want[v]}")


# ---------------------------------------------------------------- ladders

def _ladder_edges(h: int) -> tuple[list[tuple[int, int]], int, list[int]]:
    """Edges of the ladder module with h units.

    Vertex 0 is the attachment, joined to the first rung pair (1, 2). Each
    unit adds a rung on the current pair and a new rung pair below it. The
    last pair carries the two degree-2 vertices of K_{3,3} minus an edge.
    Returns (edges, order, unit vertex lists).
    """
    e = [(0, 1), (0, 2)]
    n = 3
    a, b = 1, 2
    units = []
    for _ in range(h):
        c, d, a2, b2 = n, n + 1, n + 2, n + 3
        n += 4
        e += [(a, b), (a, c), (b, d), (c, d), (c, a2), (d, b2)]
        units.append([c, d, a2, b2])
        a, b = a2, b2
    x1, x2, y1, y2 = n, n + 1, n + 2, n + 3
    n += 4
    e += [(a, x1), (a, x2), (b, y1), (b, y2), (y1, x1), (y1, x2), (y2, x1), (y2, x2)]
    return e, n, units


def build_L(h: int) -> Module:
    """Ladder module with ``7 + 4h`` vertices and one degree-2 vertex (index 0).

    With h = 0 it is K_{3,3} with one edge subdivided.
    """
    if h < 0:
        raise ValueError("h must be non-negative")
    e, n, _ = _ladder_edges(h)
    g = SimpleGraph(n, e)
    _check_degrees(g, [0], f"L_{h}")
    return Module(g, (0,))


def _join_modules(centre: Module, modules: Sequence[Module]) -> tuple[CubicGraph, list[int]]:
    """Attach each module's single attachment to one attachment of ``centre``.

    Returns the graph and the vertex offset of every module (the centre
    keeps its own labels, starting at 0).
    """
    if len(modules) != len(centre.attachments):
        raise ValueError("one module per centre attachment")
    edges = list(centre.graph.edges)
    offsets = []
    n = centre.graph.n
    for att, mod in zip(centre.attachments, modules):
        offsets.append(n)
        edges += [(u + n, v + n) for u, v in mod.graph.edges]
        edges.append((att, mod.attachments[0] + n))
        n += mod.graph.n
    return CubicGraph(n, edges), offsets


def build_kernel_gadget(h: int) -> Module:
    """Gadget with ``4h + 1`` vertices and three degree-2 attachments.

    h = 0 is a single vertex (attached three times). For h >= 1: a top
    vertex t and a side vertex s both joined to a pair (u1, u2); the pair
    leads through h - 1 blocks (two parallel edges into a K_{2,2}) to a
    bottom vertex z. For h = 1 this is K_{2,3}.
    """
    if h < 0:
        raise ValueError("h must be non-negative")
    if h == 0:
        return Module(SimpleGraph(1, []), (0, 0, 0))
    t, u1, u2, s = 0, 1, 2, 3
    e = [(t, u1), (t, u2), (u1, s), (u2, s)]
    n = 4
    a, b = u1, u2
    for _ in range(h - 1):
        p, q, r, w = n, n + 1, n + 2, n + 3
        n += 4
        e += [(a, p), (b, q), (p, r), (p, w), (q, r), (q, w)]
        a, b = r, w
    z = n
    n += 1
    e += [(a, z), (b, z)]
    g = SimpleGraph(n, e)
    _check_degrees(g, [t, s, z], f"gadget_{h}")
    return Module(g, (t, s, z))


def build_T(i: int, j: int, k: int, kernel: int = 0) -> CubicGraph:
    """Three ladder modules L_i, L_j, L_k hung on a common centre.

    ``kernel`` > 0 replaces the centre vertex by the kernel gadget of that
    parameter. Vertex 0 is the centre (or the gadget's first vertex).
    """
    if min(i, j, k, kernel) < 0:
        raise ValueError("parameters must be non-negative")
    centre = build_kernel_gadget(kernel)
    g, _ = _join_modules(centre, [build_L(i), build_L(j), build_L(k)])
    expected = 22 + 4 * (i + j + k) + 4 * kernel
    if g.n != expected:
        raise GraphError(f"T order {g.n}, expected {expected}")
    return g


# Colouring of T_000 and the per-unit rules that extend it. Local module
# order is (attachment, rung pair, x1, x2, y1, y2); a unit (c, d, a', b')
# gets (C, D, colour of a, colour of b).
_T000_CENTRE = B
_T000_MODULES = (
    (B, B, W, W, W, B, B),
    (W, B, B, B, W, W, W),
    (W, B, W, W, W, B, B),
)
_T_UNIT_RULE = ((W, B), (W, W), (W, B))


def three_bisection_T(i: int, j: int, k: int) -> tuple[int, ...]:
    """A 3-bisection of T_ijk whose two parts are isomorphic linear forests.

    Starts from a fixed colouring of T_000 and colours every inserted
    ladder unit by a fixed per-module rule; the result is verified before
    it is returned.
    """
    from .ando import is_strong_ando

    g = build_T(i, j, k)
    colour = [_T000_CENTRE]
    for base, h, (cc, dd) in zip(_T000_MODULES, (i, j, k), _T_UNIT_RULE):
        s, a, b = base[:3]
        colour += [s, a, b]
        for _ in range(h):
            colour += [cc, dd, a, b]
        colour += list(base[3:])
    c = tuple(colour)
    check = verify_k_bisection(g, c, 3)
    if not check or not is_strong_ando(g, c):
        raise AssertionError(f"T_{i}{j}{k} recipe failed: {check.reason or 'parts differ'}")
    return c


# ---------------------------------------------------------------- K33 blocks

def build_E1() -> Module:
    """K_{3,3} minus one edge; attachments are the ends of the removed edge."""
    # sides {0, 2, 3} and {1, 4, 5}, edge 0-1 removed
    e = [(0, 4), (0, 5), (2, 1), (2, 4), (2, 5), (3, 1), (3, 4), (3, 5)]
    g = SimpleGraph(6, e)
    _check_degrees(g, [0, 1], "E1")
    return Module(g, (0, 1))


def build_V1() -> Module:
    """K_{3,3} minus one vertex (K_{2,3}); attachments are the three degree-2 vertices."""
    e = [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]
    g = SimpleGraph(5, e)
    _check_degrees(g, [2, 3, 4], "V1")
    return Module(g, (2, 3, 4))


def _g_base_edges() -> tuple[list[tuple[int, int]], int]:
    """The 16-vertex base: two K_{2,3} blocks and one K_{3,3}-minus-edge block.

    Two attachments of the first block meet two of the second directly;
    the third pair is joined through the E1 block.
    """
    e: list[tuple[int, int]] = []
    v1 = build_V1().graph
    e += list(v1.edges)
    e += [(u + 5, v + 5) for u, v in v1.edges]
    e1 = build_E1().graph
    e += [(u + 10, v + 10) for u, v in e1.edges]
    e += [(2, 7), (3, 8), (4, 10), (11, 9)]
    return e, 16


def build_Gk(k: int) -> CubicGraph:
    """The base with the edge between the first attachments replaced by a chain of 2k E1 blocks.

    Order 28 + 12 (k - 1).
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    e, n = _g_base_edges()
    e.remove((2, 7))
    e1 = build_E1().graph
    prev = 2
    for _ in range(2 * k):
        e += [(u + n, v + n) for u, v in e1.edges]
        e.append((prev, n))
        prev = n + 1
        n += 6
    e.append((prev, 7))
    g = CubicGraph(n, e)
    if g.n != 28 + 12 * (k - 1):
        raise GraphError(f"G_{k} has order {g.n}")
    return g


# ---------------------------------------------------------------- named graphs

def lcf(n: int, shifts: Sequence[int], repeats: int) -> CubicGraph:
    """Hamiltonian cubic graph from LCF notation ``[shifts]^repeats``."""
    seq = list(shifts) * repeats
    if len(seq) != n:
        raise ValueError("LCF sequence length must equal n")
    e = {tuple(sorted((i, (i + 1) % n))) for i in range(n)}
    for i, s in enumerate(seq):
        e.add(tuple(sorted((i, (i + s) % n))))
    return CubicGraph(n, sorted(e))


def petersen() -> CubicGraph:
    from .cyperm import build_gp

    g = build_gp(5, 2)
    if g.n != 10 or g.girth() != 5:
        raise GraphError("Petersen construction failed")
    return g


def heawood() -> CubicGraph:
    """Point/line incidence graph of the Fano plane (lines {i, i+1, i+3} mod 7)."""
    e = []
    for line in range(7):
        for d in (0, 1, 3):
            e.append(((line + d) % 7, 7 + line))
    g = CubicGraph(14, e)
    if not (g.is_bipartite() and g.girth() == 6 and g.diameter() == 3):
        raise GraphError("Heawood construction failed")
    return g


def heawood_lcf() -> CubicGraph:
    return lcf(14, [5, -5], 7)


def k4() -> CubicGraph:
    return CubicGraph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


def k33() -> CubicGraph:
    return CubicGraph(6, [(a, b) for a in range(3) for b in range(3, 6)])


def prism(k: int = 3) -> CubicGraph:
    """C_k x K_2 (2k vertices)."""
    if k < 3:
        raise ValueError("prism needs k >= 3")
    e = []
    for i in range(k):
        e += [(i, (i + 1) % k), (k + i, k + (i + 1) % k), (i, k + i)]
    return CubicGraph(2 * k, e)


def triangle_expanded_k33() -> CubicGraph:
    """K_{3,3} with the three vertices of one side replaced by triangles (order 12)."""
    e = []
    for t in range(3):
        a, b, c = 3 * t, 3 * t + 1, 3 * t + 2
        e += [(a, b), (b, c), (a, c)]
        for s, x in enumerate((a, b, c)):
            e.append((x, 9 + s))
    return CubicGraph(12, e)


def no_perfect_matching_16() -> CubicGraph:
    """Smallest cubic graph with no perfect matching: three K4-with-subdivided-edge
    blocks joined to a central vertex."""
    e = []
    n = 1
    for _ in range(3):
        # K4 on n..n+3 with edge (n, n+1) subdivided by n+4
        a, b, c, d, s = n, n + 1, n + 2, n + 3, n + 4
        e += [(a, c), (a, d), (b, c), (b, d), (c, d), (a, s), (b, s), (0, s)]
        n += 5
    return CubicGraph(16, e)


def build_family(name: str, params: Sequence[int] = ()) -> SimpleGraph:
    """Dispatch by family name, as used by the command line."""
    p = list(params)
    if name == "L":
        return build_L(*p).graph
    if name == "T":
        return build_T(*p)
    if name == "kernel":
        return build_kernel_gadget(*p).graph
    if name == "Tkernel":
        i, j, k, h = p
        return build_T(i, j, k, kernel=h)
    if name == "E1":
        return build_E1().graph
    if name == "V1":
        return build_V1().graph
    if name == "G":
        return build_Gk(*p)
    simple = {
        "petersen": petersen,
        "heawood": heawood,
        "K4": k4,
        "K33": k33,
        "prism": lambda: prism(*p) if p else prism(),
        "triangle-K33": triangle_expanded_k33,
        "no-pm-16": no_perfect_matching_16,
    }
    if name in simple:
        return simple[name]()
    raise ValueError(f"unknown family {name!r}; choose from {', '.join(FAMILY_NAMES)}")


def same_graph(a: SimpleGraph, b: SimpleGraph) -> bool:
    return are_isomorphic(a, b)
