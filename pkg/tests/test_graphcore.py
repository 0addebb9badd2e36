from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from bisectlab.families import heawood, k4, k33, petersen, prism
from bisectlab.graphcore import (
    CubicGraph,
    Graph6Error,
    GraphError,
    SimpleGraph,
    are_isomorphic,
    as_cubic,
    canonical_code,
    connected_cubic,
    disjoint_union,
    enumerate_cubic,
    has_perfect_matching,
    is_proper_edge_colouring,
    isomorphism,
    parse_graph6,
    proper_3_edge_colouring,
    read_graph6_lines,
    vertex_connectivity,
    write_graph6,
)

from oracles import naive_cubic, random_cubic, to_nx


def test_graph6_known_strings():
    assert write_graph6(k4()) == "C~"
    assert parse_graph6("C~").m == 6
    # networkx agrees on the encoding
    p = petersen()
    assert nx.to_graph6_bytes(to_nx(p), header=False).strip().decode() == write_graph6(p)


@pytest.mark.parametrize("bad", ["", "C", "C~~", "C\x01", "~??"])
def test_graph6_malformed(bad):
    with pytest.raises(Graph6Error):
        parse_graph6(bad)


def test_read_lines_reports_line_numbers():
    items = list(read_graph6_lines(["C~\n", "\n", "xx\n", "C~\n"], strict=False))
    assert [ln for ln, _ in items] == [1, 3, 4]
    assert isinstance(items[1][1], Graph6Error)
    with pytest.raises(Graph6Error, match="line 3"):
        list(read_graph6_lines(["C~", "", "xx"]))


def test_cubic_rejects_bad_degree():
    with pytest.raises(GraphError):
        CubicGraph(4, [(0, 1), (1, 2), (2, 3)])
    with pytest.raises(GraphError):
        SimpleGraph(3, [(0, 0)])


def test_basic_invariants():
    assert petersen().girth() == 5 and petersen().diameter() == 2
    h = heawood()
    assert h.girth() == 6 and h.is_bipartite() and h.diameter() == 3
    assert k33().is_bipartite() and not k4().is_bipartite()
    assert vertex_connectivity(k4()) == 3
    assert vertex_connectivity(disjoint_union(k4(), k4())) == 0


def test_enumeration_counts():
    counts = [len(connected_cubic(n)) for n in range(4, 17, 2)]
    assert counts == [1, 2, 5, 19, 85, 509, 4060]


@pytest.mark.parametrize("n", [4, 6, 8, 10])
def test_enumeration_matches_naive_oracle(n):
    mine = {canonical_code(g) for g in connected_cubic(n)}
    ref = {canonical_code(SimpleGraph(n, h.edges())) for h in naive_cubic(n)}
    assert mine == ref and len(mine) == len(connected_cubic(n))


@pytest.mark.slow
def test_enumeration_matches_naive_oracle_12():
    mine = {canonical_code(g) for g in connected_cubic(12)}
    assert mine == {canonical_code(SimpleGraph(12, h.edges())) for h in naive_cubic(12)}


def test_disconnected_enumeration():
    # order 8: five connected graphs plus 2 K4
    graphs = list(enumerate_cubic(8, connected_only=False))
    assert len(graphs) == 6
    assert sum(not g.is_connected() for g in graphs) == 1
    with pytest.raises(ValueError):
        list(enumerate_cubic(7))


def test_enumerated_graphs_pairwise_non_isomorphic_networkx():
    gs = [to_nx(g) for g in connected_cubic(10)]
    for i in range(len(gs)):
        for j in range(i + 1, len(gs)):
            assert not nx.is_isomorphic(gs[i], gs[j])


def test_graph6_round_trip_random():
    rng = random.Random(7)
    for i in range(10_000):
        n = rng.choice((4, 6, 8, 10, 12, 14, 16, 20, 30))
        g = SimpleGraph(n, random_cubic(n, rng.randrange(1 << 30)))
        assert parse_graph6(write_graph6(g)) == g


@settings(max_examples=60, deadline=None)
@given(n=st.sampled_from([8, 10, 12, 16, 20]), seed=st.integers(0, 10**6), pseed=st.integers(0, 10**6))
def test_canonical_code_relabelling_invariant(n, seed, pseed):
    g = SimpleGraph(n, random_cubic(n, seed))
    perm = list(range(n))
    random.Random(pseed).shuffle(perm)
    h = g.relabel(perm)
    assert canonical_code(g) == canonical_code(h)
    phi = isomorphism(g, h)
    assert phi is not None and all(h.has_edge(phi[u], phi[v]) for u, v in g.edges)


def test_canonical_code_separates_classes():
    for n in (8, 10, 12):
        codes = [canonical_code(g) for g in connected_cubic(n)]
        assert len(set(codes)) == len(codes)
    assert not are_isomorphic(k33(), prism())


def test_three_edge_colouring_and_matching():
    assert proper_3_edge_colouring(petersen()) is None
    for g in (k4(), k33(), prism(), heawood()):
        ec = proper_3_edge_colouring(g)
        assert ec is not None and is_proper_edge_colouring(g, ec)
        assert has_perfect_matching(g)


def test_as_cubic_checks_degrees():
    assert isinstance(as_cubic(SimpleGraph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])), CubicGraph)
