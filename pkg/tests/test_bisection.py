from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from bisectlab.bisection import (
    B,
    W,
    brute_force_k_bisection_exists,
    find_k_bisection,
    isolated_counts,
    iter_k_bisections,
    two_bisection_from_3ec,
    verify_k_bisection,
)
from bisectlab.budget import BudgetExceeded, Deadline
from bisectlab.families import heawood, k4, k33, petersen, prism
from bisectlab.graphcore import SimpleGraph, as_cubic, connected_cubic, proper_3_edge_colouring

from oracles import brute_k_bisection, random_cubic



def test_verify_rejects_bad_input():
    g = k4()
    with pytest.raises(ValueError):
        verify_k_bisection(g, [0, 1, 0], 2)
    with pytest.raises(ValueError):
        verify_k_bisection(g, [0, 1, 2, 0], 2)
    assert not verify_k_bisection(g, [B, B, B, W], 3)
    assert verify_k_bisection(g, [B, B, W, W], 2)
    assert not verify_k_bisection(g, [B, B, W, W], 1)


def test_petersen_bisection_orders():
    g = petersen()
    assert find_k_bisection(g, 2) is None
    w = find_k_bisection(g, 3)
    assert w is not None and verify_k_bisection(g, w.colouring, 3)
    assert max(w.black_orders + w.white_orders) == 3


@pytest.mark.parametrize("n", [4, 6, 8, 10])
def test_find_matches_brute_force(n):
    for g in connected_cubic(n):
        for k in (1, 2, 3):
            expected = brute_k_bisection(g, k)
            assert (find_k_bisection(g, k) is not None) == expected
            assert brute_force_k_bisection_exists(g, k) == expected


def test_iter_enumerates_each_bisection_once():
    g = prism()
    found = list(iter_k_bisections(g, 3))
    assert len(found) == len(set(found))
    assert all(c[0] == B and verify_k_bisection(g, c, 3) for c in found)
    # every 3-bisection up to colour swap, by brute force
    from itertools import combinations

    ref = 0
    for rest in combinations(range(1, 6), 2):
        c = [W] * 6
        for v in (0, *rest):
            c[v] = B
        ref += bool(verify_k_bisection(g, c, 3))
    assert ref == len(found)


@pytest.mark.parametrize("g", [k4(), k33(), prism(), heawood()], ids=["K4", "K33", "prism", "heawood"])
def test_two_bisection_from_3ec(g):
    ec = proper_3_edge_colouring(g)
    w = two_bisection_from_3ec(g, ec)
    assert verify_k_bisection(g, w.colouring, 2)


def test_two_bisection_from_3ec_rejects_improper():
    with pytest.raises(ValueError):
        two_bisection_from_3ec(k4(), [0] * 6)


@settings(max_examples=40, deadline=None)
@given(n=st.sampled_from([6, 8, 10, 12, 14, 16]), seed=st.integers(0, 10**6))
def test_isolated_counts_balanced_in_2_bisections(n, seed):
    g = as_cubic(SimpleGraph(n, random_cubic(n, seed)))
    w = find_k_bisection(g, 2)
    if w is None:
        return
    (vb, eb), (vw, ew) = isolated_counts(g, w.colouring)
    assert vb == vw and eb == ew
    assert vb + 2 * eb == n // 2


def test_budget_interrupts_search():
    g = connected_cubic(16)[0]
    with pytest.raises(BudgetExceeded):
        for _ in iter_k_bisections(g, 8, Deadline(0.0, every=1)):
            pass


def test_k_must_be_positive():
    with pytest.raises(ValueError):
        find_k_bisection(k4(), 0)
