from __future__ import annotations

import networkx as nx
import pytest

from bisectlab.ando import (
    NotLinearForest,
    find_ando,
    find_k_bisection_iso_linear_forests,
    is_ando,
    is_k_bisection_iso_linear_forests,
    is_strong_ando,
    linear_forest_signature,
    minimal_k_iso_linear_forests,
    reduce_to_max_degree_2,
)
from bisectlab.bisection import B, W, iter_k_bisections
from bisectlab.families import k4, k33, petersen, prism
from bisectlab.graphcore import connected_cubic

from oracles import all_bisections, brute_ando, class_paths, to_nx


def test_linear_forest_signature():
    g = prism()  # triangles 0-1-2 / 3-4-5, rungs i -- i+3 (see families.prism)
    assert linear_forest_signature(g, [0, 1]) == (1,)
    assert linear_forest_signature(g, [0, 3, 4]) == (2,)
    with pytest.raises(NotLinearForest) as exc:
        linear_forest_signature(g, [0, 1, 2])
    assert exc.value.vertex in (0, 1, 2)
    with pytest.raises(NotLinearForest):
        linear_forest_signature(k4(), [0, 1, 2, 3])


def test_is_ando_and_strong():
    g = k33()
    sides = [B if v in (0, 1, 2) else W for v in range(6)]
    assert is_ando(g, sides) and is_strong_ando(g, sides)  # two edgeless parts
    assert not is_ando(g, [B, B, B, B, W, W])


@pytest.mark.parametrize("n", [4, 6, 8, 10])
def test_find_ando_matches_brute_force(n):
    for g in connected_cubic(n):
        c = find_ando(g)
        assert (c is not None) == brute_ando(g)
        if c is not None:
            assert is_ando(g, c)


def test_petersen_certificates():
    g = petersen()
    assert not any(is_ando(g, c) for c in iter_k_bisections(g, 3))
    c = find_k_bisection_iso_linear_forests(g, 4)
    assert c is not None and is_k_bisection_iso_linear_forests(g, c, 4)
    assert find_k_bisection_iso_linear_forests(g, 3) is None
    assert minimal_k_iso_linear_forests(g) == 4


def _brute_iso_lf(g, k):
    h = to_nx(g)
    for c in all_bisections(g.n):
        parts = [h.subgraph([v for v in h if c[v] == x]) for x in (0, 1)]
        ok = True
        for p in parts:
            if max(d for _, d in p.degree()) > 2 or not nx.is_forest(p):
                ok = False
            elif max(len(x) for x in nx.connected_components(p)) > k:
                ok = False
        if ok and nx.is_isomorphic(*parts):
            return True
    return False


@pytest.mark.parametrize("n", [4, 6, 8])
def test_iso_linear_forests_brute_force(n):
    for g in connected_cubic(n):
        for k in (1, 2, 3, 4):
            c = find_k_bisection_iso_linear_forests(g, k)
            assert (c is not None) == _brute_iso_lf(g, k)
            if c is not None:
                assert is_k_bisection_iso_linear_forests(g, c, k)


def test_iso_linear_forests_rejects_bad_k():
    with pytest.raises(ValueError):
        find_k_bisection_iso_linear_forests(k4(), 0)


def _heavy(g, c):
    return [v for v in range(g.n) if all(c[w] == c[v] for w in g.adj[v])]


@pytest.mark.parametrize("n", [8, 10])
def test_reduce_to_max_degree_2(n):
    seen = 0
    for g in connected_cubic(n):
        for c in all_bisections(n):
            if _heavy(g, c) and is_ando(g, c):
                r = reduce_to_max_degree_2(g, c)
                assert is_ando(g, r) and not _heavy(g, r)
                seen += 1
                break
    assert seen > 0


def test_reduce_rejects_non_ando():
    with pytest.raises(ValueError):
        reduce_to_max_degree_2(prism(), [B, B, B, B, W, W])
