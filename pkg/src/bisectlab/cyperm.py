"""Cycle permutation graphs C(n, p), generalised Petersen graphs, and a
constructive 2-bisection for every cycle permutation graph except Petersen.

Labelling: outer cycle u_0..u_{n-1} is vertices 0..n-1, inner cycle
v_0..v_{n-1} is vertices n..2n-1, and the spokes are v_i u_{p_i}.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from math import gcd
from typing import Sequence

from .bisection import B, W, Bisection, find_k_bisection, two_bisection_from_3ec, verify_k_bisection
from .graphcore import CubicGraph, are_isomorphic, proper_3_edge_colouring

log = logging.getLogger(__name__)


class PetersenException(Exception):
    """The Petersen graph has no 2-bisection."""


@dataclass(frozen=True)
class CpgSpec:
    n: int
    p: tuple[int, ...]

    def __post_init__(self):
        p = tuple(int(x) for x in self.p)
        object.__setattr__(self, "p", p)
        if len(p) != self.n or sorted(p) != list(range(self.n)):
            raise ValueError(f"p is not a permutation of 0..{self.n - 1}")
        if self.n < 3:
            raise ValueError("n must be at least 3")

    def u(self, i: int) -> int:
        return i % self.n

    def v(self, i: int) -> int:
        return self.n + i % self.n

    def inverse(self) -> "CpgSpec":
        q = [0] * self.n
        for i, x in enumerate(self.p):
            q[x] = i
        return CpgSpec(self.n, tuple(q))

    def bar(self) -> "CpgSpec":
        return CpgSpec(self.n, tuple((-x) % self.n for x in self.p))


@dataclass(frozen=True)
class Normalized:
    spec: CpgSpec
    vertex_map: tuple[int, ...]  # vertex of the normalized graph -> vertex of the original
    steps: tuple[str, ...] = field(default=())


@dataclass(frozen=True)
class GoodConfiguration:
    a_r: int
    a_r1: int
    a: int
    b_s: int
    b_s1: int
    b: int


@dataclass(frozen=True)
class CpgBisection:
    colouring: Bisection
    method: str
    fallback: bool = False


def build_cpg(spec: CpgSpec) -> CubicGraph:
    n = spec.n
    e = []
    for i in range(n):
        e.append((spec.u(i), spec.u(i + 1)))
        e.append((spec.v(i), spec.v(i + 1)))
        e.append((spec.v(i), spec.u(spec.p[i])))
    return CubicGraph(2 * n, e)


def build_gp(n: int, k: int) -> CubicGraph:
    """GP(n, k): u_i = i, v_i = n + i."""
    if not 2 <= 2 * k < n:
        raise ValueError("GP(n, k) needs 2 <= 2k < n")
    e = []
    for i in range(n):
        e += [(i, (i + 1) % n), (i, n + i), (n + i, n + (i + k) % n)]
    return CubicGraph(2 * n, e)


def gp_spec(n: int, k: int) -> CpgSpec:
    """GP(n, k) as C(n, p) when gcd(n, k) = 1: the inner cycle runs v_0, v_k, v_2k, ..."""
    if gcd(n, k) != 1:
        raise ValueError("GP(n, k) is a cycle permutation graph here only when gcd(n, k) = 1")
    return CpgSpec(n, tuple((j * k) % n for j in range(n)))


def gap(spec: CpgSpec, i: int) -> int:
    """Length of the outer path from u_{p_i} forward to u_{p_{i+1}}."""
    n = spec.n
    return (spec.p[(i + 1) % n] - spec.p[i % n]) % n


def inverse_gap(spec: CpgSpec, i: int) -> int:
    return gap(spec.inverse(), i)


def normalize(spec: CpgSpec) -> Normalized:
    """Rotate so that p_0 = 0, then (n odd) reflect the outer cycle if p_1 is odd.

    The returned vertex map sends each vertex of the normalized graph to
    the corresponding vertex of the input graph.
    """
    n = spec.n
    p0 = spec.p[0]
    steps = []
    p = tuple((x - p0) % n for x in spec.p)
    umap = [(j + p0) % n for j in range(n)]
    if p0:
        steps.append(f"rotate outer by {p0}")
    if n % 2 and p[1] % 2:
        p = tuple((-x) % n for x in p)
        umap = [umap[(-j) % n] for j in range(n)]
        steps.append("reflect outer")
    vmap = tuple(umap) + tuple(range(n, 2 * n))
    return Normalized(CpgSpec(n, p), vmap, tuple(steps))


def _arc_len(n: int, a: int, b: int, avoid: int) -> int | None:
    """Length of the path on an n-cycle from a to b not passing through avoid."""
    fwd = (b - a) % n
    if (avoid - a) % n < fwd and avoid != a:
        return (a - b) % n
    return fwd


def validate_good_configuration(spec: CpgSpec, gc: GoodConfiguration) -> bool:
    n = spec.n
    g = build_cpg(spec)
    outer = (gc.a_r, gc.a_r1, gc.a)
    inner = (gc.b_s, gc.b_s1, gc.b)
    if any(x >= n for x in outer) or any(x < n for x in inner):
        return False
    if len(set(outer)) != 3 or len(set(inner)) != 3:
        return False
    for x, y in ((gc.a_r, gc.a_r1), (gc.a_r, gc.b), (gc.a_r1, gc.b_s), (gc.a, gc.b_s1), (gc.b_s, gc.b_s1)):
        if not g.has_edge(x, y):
            return False
    la = _arc_len(n, gc.a, gc.a_r1, gc.a_r)
    lb = _arc_len(n, gc.b - n, gc.b_s - n, gc.b_s1 - n)
    return la % 2 == 0 and lb % 2 == 0


def _odd_gap_configuration(spec: CpgSpec) -> GoodConfiguration | None:
    n, p = spec.n, spec.p
    q = spec.inverse().p
    odd = [i for i in range(n) if gap(spec, i) % 2]
    if not odd:
        return None
    t = odd[0]
    pt = p[t]
    u = (pt + 1) % n
    vj = q[u]
    # Q runs from v_{t+1} to v avoiding v_t; measured the other way round
    # the two cases below would both give an odd inner path.
    qlen = (vj - t - 1) % n
    if qlen % 2:
        return GoodConfiguration(u, pt, p[(t - 1) % n], spec.v(t), spec.v(t - 1), spec.v(vj))
    return GoodConfiguration(u, pt, p[(t + 1) % n], spec.v(t), spec.v(t + 1), spec.v(vj))


def _even_inverse_gap_configuration(spec: CpgSpec) -> GoodConfiguration | None:
    n, p = spec.n, spec.p
    q = spec.inverse().p
    even = [t for t in range(n) if ((q[(t + 1) % n] - q[t]) % n) % 2 == 0]
    if not even:
        return None
    t = even[0]
    bj = (q[t] - 1) % n
    # a_{r+1} is the outer vertex whose spoke meets b_s
    return GoodConfiguration(
        a_r=(t + 1) % n, a_r1=t, a=p[bj], b_s=spec.v(q[t]), b_s1=spec.v(bj), b=spec.v(q[(t + 1) % n])
    )


def _scan_good_configurations(spec: CpgSpec) -> GoodConfiguration | None:
    n, p = spec.n, spec.p
    q = spec.inverse().p
    for r in range(n):
        for a_r, a_r1 in ((r, (r + 1) % n), ((r + 1) % n, r)):
            b_s = q[a_r1]
            b = q[a_r]
            for b_s1 in ((b_s + 1) % n, (b_s - 1) % n):
                gc = GoodConfiguration(a_r, a_r1, p[b_s1], spec.v(b_s), spec.v(b_s1), spec.v(b))
                if validate_good_configuration(spec, gc):
                    return gc
    return None


def find_good_configuration(spec: CpgSpec) -> tuple[GoodConfiguration, str] | None:
    """A good configuration and where it came from: "odd-gap", "even-inverse-gap" or "scan".

    Expects a normalized spec with n odd. The two constructions are tried
    first and validated; the scan over all candidate sextuples (there are
    4n) settles the rest.
    """
    if spec.n % 2 == 0:
        raise ValueError("good configurations are used for odd n")
    if spec.p[0] != 0 or spec.p[1] % 2:
        raise ValueError("spec must be normalized (p_0 = 0, p_1 even)")
    all_gaps = [gap(spec, i) for i in range(spec.n)]
    if 1 in all_gaps or spec.n - 1 in all_gaps:
        raise ValueError("gaps 1 and n-1 are handled by the Hamiltonian case")
    if any(x % 2 for x in all_gaps):
        gc = _odd_gap_configuration(spec)
        if gc is not None and validate_good_configuration(spec, gc):
            return gc, "odd-gap"
        log.warning("odd-gap construction invalid for %s", spec)
    else:
        gc = _even_inverse_gap_configuration(spec)
        if gc is not None:
            if validate_good_configuration(spec, gc):
                return gc, "even-inverse-gap"
            log.warning("even-inverse-gap construction invalid for %s", spec)
    gc = _scan_good_configurations(spec)
    return (gc, "scan") if gc is not None else None


def colour_from_good_configuration(spec: CpgSpec, gc: GoodConfiguration) -> Bisection:
    """Alternate both cycles, with a_r, a_{r+1} white and b_s, b_{s+1} black."""
    if not validate_good_configuration(spec, gc):
        raise ValueError("not a good configuration")
    n = spec.n
    c = [0] * (2 * n)
    step = (gc.a_r1 - gc.a_r) % n  # direction from a_r to a_{r+1}
    for t in range(n):
        c[(gc.a_r1 + step * t) % n] = W if t % 2 == 0 else B
    bs, bs1 = gc.b_s - n, gc.b_s1 - n
    step = (bs1 - bs) % n
    for t in range(n):
        c[n + (bs1 + step * t) % n] = B if t % 2 == 0 else W
    return tuple(c)


def _ec_even(spec: CpgSpec, g: CubicGraph) -> list[int]:
    ec = [2] * g.m
    n = spec.n
    for i in range(n):
        ec[g.edge_id(spec.u(i), spec.u(i + 1))] = i % 2
        ec[g.edge_id(spec.v(i), spec.v(i + 1))] = i % 2
    return ec


def _hamiltonian_cycle(spec: CpgSpec) -> list[int] | None:
    n, p = spec.n, spec.p
    for i in range(n):
        a, b = p[i], p[(i + 1) % n]
        if (b - a) % n == 1:
            outer = [(a - t) % n for t in range(n)]  # a back around to b
        elif (a - b) % n == 1:
            outer = [(a + t) % n for t in range(n)]
        else:
            continue
        inner = [spec.v(i + 1 + t) for t in range(n)]  # v_{i+1} .. v_i
        return inner + outer
    return None


def _ec_from_cycle(g: CubicGraph, cycle: Sequence[int]) -> list[int]:
    ec = [2] * g.m
    for t in range(len(cycle)):
        ec[g.edge_id(cycle[t], cycle[(t + 1) % len(cycle)])] = t % 2
    return ec


def _select_xy(spec: CpgSpec, min_dist: int = 3) -> int | None:
    """Smallest i whose spoke partners v_{q(i)}, v_{q(i+1)} are at inner distance >= min_dist."""
    n = spec.n
    q = spec.inverse().p
    for i in range(n):
        d = (q[(i + 1) % n] - q[i]) % n
        if min(d, n - d) >= min_dist:
            return i
    return None


def _type_colouring(spec: CpgSpec, i: int) -> tuple[str, Bisection]:
    """Outer pair u_i, u_{i+1} white, x and y black, then force colours inward along P_2.

    P_2 is the odd inner path between x and y; its interior is walked from
    both ends (x_1, y_1, x_2, y_2, ...). The first pair that is not forced
    gets a doubled colour, which fixes Type I (doubled black) or Type II
    (doubled white); the even path P_1 then alternates from that choice.
    """
    n = spec.n
    q = spec.inverse().p
    c = [0] * (2 * n)
    for t in range(n):
        c[(i + 1 + t) % n] = W if t % 2 == 0 else B
    x, y = q[(i + 1) % n], q[i]
    fwd = (y - x) % n
    if fwd % 2 == 0:
        p1 = [(x + t) % n for t in range(1, fwd)]
        p2 = [(x - t) % n for t in range(1, n - fwd)]
    else:
        p1 = [(x - t) % n for t in range(1, n - fwd)]
        p2 = [(x + t) % n for t in range(1, fwd)]
    c[spec.v(x)] = c[spec.v(y)] = B
    half = len(p2) // 2
    xs, ys = p2[:half], p2[half:][::-1]  # x_1..x_t and y_1..y_t

    def outer(w: int) -> int:
        return c[spec.p[w]]

    prev = W
    c[spec.v(xs[0])] = c[spec.v(ys[0])] = W
    doubled = W if half == 1 else None
    for j in range(1, half):
        if outer(xs[j]) == prev and outer(ys[j]) == prev:
            prev = B if prev == W else W
            c[spec.v(xs[j])] = c[spec.v(ys[j])] = prev
            continue
        # double x_{j-1}x_j if x_j may take prev, else y_{j-1}y_j
        side, other = (xs, ys) if outer(xs[j]) != prev else (ys, xs)
        col = prev
        for w in side[j:]:
            c[spec.v(w)] = col
            col = B if col == W else W
        for w in reversed(other[j:]):
            c[spec.v(w)] = col
            col = B if col == W else W
        doubled = prev
        break
    if doubled is None:
        doubled = prev  # x_t and y_t are forced alike and adjacent
    end = B if doubled == W else W
    for k, w in enumerate(p1):
        c[spec.v(w)] = end if k % 2 == 0 else (B if end == W else W)
    return ("type-II" if doubled == W else "type-I"), tuple(c)


def two_bisection_cpg(spec: CpgSpec) -> CpgBisection:
    """A verified 2-bisection of C(n, p); PetersenException for the Petersen graph."""
    g = build_cpg(spec)
    n = spec.n
    result = None
    method = ""
    if n % 2 == 0:
        method = "even-n"
        result = two_bisection_from_3ec(g, _ec_even(spec, g)).colouring
    else:
        ham = _hamiltonian_cycle(spec)
        if ham is not None:
            method = "hamiltonian"
            result = two_bisection_from_3ec(g, _ec_from_cycle(g, ham)).colouring
        else:
            norm = normalize(spec)
            found = find_good_configuration(norm.spec)
            if found is not None:
                gc, method = found
                local = colour_from_good_configuration(norm.spec, gc)
                result = _pull_back(local, norm.vertex_map)
            else:
                result, method = _no_good_configuration(norm, g)
    if result is not None and verify_k_bisection(g, result, 2):
        return CpgBisection(tuple(result), method)
    log.warning("construction %r failed to verify for %s; falling back to search", method, spec)
    w = find_k_bisection(g, 2)
    if w is None:
        raise PetersenException(f"C({n}, {spec.p}) has no 2-bisection")
    return CpgBisection(w.colouring, method or "search", fallback=True)


def _pull_back(local: Sequence[int], vmap: Sequence[int]) -> Bisection:
    out = [0] * len(local)
    for v, c in enumerate(local):
        out[vmap[v]] = c
    return tuple(out)


def _no_good_configuration(norm: Normalized, g: CubicGraph) -> tuple[Bisection | None, str]:
    spec = norm.spec
    n = spec.n
    gp = build_gp(n, (n - 1) // 2) if n >= 5 else None
    hg = build_cpg(spec)
    if gp is not None and are_isomorphic(hg, gp):
        if n == 5:
            raise PetersenException("the Petersen graph has no 2-bisection")
        ec = proper_3_edge_colouring(hg)
        if ec is None:
            return None, "gp-3ec"
        return _pull_back(two_bisection_from_3ec(hg, ec).colouring, norm.vertex_map), "gp-3ec"
    i = _select_xy(spec)
    if i is None:
        return None, "outer-pair"
    kind, col = _type_colouring(spec, i)
    return _pull_back(col, norm.vertex_map), kind


def all_specs(n: int):
    """Every permutation with p_0 = 0, in lexicographic order."""
    from itertools import permutations

    for rest in permutations(range(1, n)):
        yield CpgSpec(n, (0, *rest))
