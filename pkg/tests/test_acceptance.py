"""Acceptance criteria 1-11, each checked at its stated (exact) tolerance.

Run with pytest, or directly with ``python tests/test_acceptance.py`` for a
plain pass/fail listing.
"""

from __future__ import annotations

import random
import sys
import time
from collections import Counter

import pytest

from bisectlab.ando import find_ando, find_k_bisection_iso_linear_forests, is_ando, is_strong_ando
from bisectlab.arboricity import (
    check_path_invariants,
    component_edge_counts,
    find_two_colouring_max4_edge_components,
    find_two_k_linear_forests,
)
from bisectlab.bisection import find_k_bisection, iter_k_bisections, verify_k_bisection
from bisectlab.cli import ScanParams, run_scan
from bisectlab.cyperm import CpgSpec, PetersenException, all_specs, build_cpg, two_bisection_cpg
from bisectlab.families import (
    build_Gk,
    build_T,
    heawood,
    k33,
    no_perfect_matching_16,
    petersen,
    prism,
    three_bisection_T,
    triangle_expanded_k33,
)
from bisectlab.graphcore import (
    SimpleGraph,
    canonical_code,
    connected_cubic,
    has_perfect_matching,
    parse_graph6,
    vertex_connectivity,
    write_graph6,
)
from bisectlab.wormald import (
    ando_from_wormald,
    find_strong_wormald,
    find_strong_wormald_bisection_method,
    find_strong_wormald_direct,
    find_wormald,
)

from oracles import brute_ando, brute_k_bisection, random_cubic


def _graphs(orders):
    idx = 0
    for n in orders:
        for g in connected_cubic(n):
            idx += 1
            yield idx, g


def _failures(report) -> dict[int, int]:
    return {n: s.failures for n, s in sorted(report.orders.items()) if s.scanned}


def criterion_1():
    r = run_scan(_graphs(range(4, 19, 2)), "k-bisection", ScanParams(k=2))
    fails = _failures(r)
    want = {n: (1 if n == 10 else 0) for n in range(4, 19, 2)}
    (w,) = r.orders[10].witnesses
    petersen_ok = canonical_code(parse_graph6(w)) == canonical_code(petersen())
    ok = fails == want and petersen_ok and r.inconclusive == 0
    return ok, f"failures {fails}, order-10 witness is Petersen: {petersen_ok}"


def criterion_2():
    r = run_scan(_graphs((4, 8, 12, 16)), "strong-wormald", ScanParams())
    fails = _failures(r)
    split = dict(r.orders[16].connectivity)
    ok = fails == {4: 0, 8: 0, 12: 0, 16: 3} and split == {1: 1, 2: 1, 3: 1} and r.inconclusive == 0
    return ok, f"failures {fails}, order-16 connectivity split {split}"


def criterion_3():
    r = run_scan(_graphs((6, 10, 14)), "strong-wormald-2mod4", ScanParams())
    fails = _failures(r)
    ok = fails == {6: 0, 10: 0, 14: 0} and r.inconclusive == 0
    return ok, f"failures {fails} over {sum(s.scanned for s in r.orders.values())} graphs"


def criterion_4():
    compared = 0
    disagree = []
    for n in range(4, 15, 2):
        for g in connected_cubic(n):
            a = find_strong_wormald_bisection_method(g) is not None
            b = find_strong_wormald_direct(g) is not None
            compared += 1
            if a != b:
                disagree.append(write_graph6(g))
    return not disagree, f"{compared} graphs compared, {len(disagree)} disagreements"


def criterion_5():
    r = run_scan(_graphs((4, 8, 12, 16)), "wormald", ScanParams())
    fails = _failures(r)
    sw16 = run_scan(_graphs((16,)), "strong-wormald", ScanParams()).orders[16].witnesses
    all_have = all(find_wormald(parse_graph6(w)) is not None for w in sw16)
    ok = fails == {4: 0, 8: 0, 12: 0, 16: 0} and len(sw16) == 3 and all_have and r.inconclusive == 0
    return ok, f"failures {fails}; the {len(sw16)} Strong Wormald failures admit Wormald colourings: {all_have}"


def criterion_6():
    g = petersen()
    no2 = find_k_bisection(g, 2) is None
    w3 = find_k_bisection(g, 3)
    has3 = w3 is not None and bool(verify_k_bisection(g, w3.colouring, 3))
    no_iso3 = not any(is_ando(g, c) for c in iter_k_bisections(g, 3))
    c4 = find_k_bisection_iso_linear_forests(g, 4)
    has4 = c4 is not None and bool(verify_k_bisection(g, c4, 4)) and is_strong_ando(g, c4)
    ok = no2 and has3 and no_iso3 and has4
    return ok, f"no 2-bisection {no2}, 3-bisection {has3}, no iso 3-bisection {no_iso3}, iso-LF 4-bisection {has4}"


def criterion_7():
    pet = canonical_code(petersen())
    counts = Counter()
    problems = []
    for n in (5, 7, 9):
        for s in all_specs(n):
            g = build_cpg(s)
            is_pet = n == 5 and canonical_code(g) == pet
            general = find_k_bisection(g, 2) is not None
            try:
                res = two_bisection_cpg(s)
            except PetersenException:
                counts["petersen"] += 1
                if not is_pet or general:
                    problems.append(s)
                continue
            counts["verified"] += 1
            if is_pet or res.fallback or not general or not verify_k_bisection(g, res.colouring, 2):
                problems.append(s)
    ok = not problems and counts["petersen"] == sum(
        canonical_code(build_cpg(s)) == pet for s in all_specs(5)
    )
    return ok, f"{counts['verified']} verified, {counts['petersen']} Petersen specs, {len(problems)} problems"


def criterion_8():
    bad = []
    small = [(i, j, k) for i in range(3) for j in range(3) for k in range(3) if i + j + k <= 2]
    for ijk in small:
        g = build_T(*ijk)
        c = three_bisection_T(*ijk)
        if (
            find_k_bisection(g, 2) is not None
            or has_perfect_matching(g)
            or vertex_connectivity(g) != 1
            or not verify_k_bisection(g, c, 3)
            or not is_strong_ando(g, c)
        ):
            bad.append(ijk)
    g1 = build_Gk(1)
    t0 = time.perf_counter()
    none_b = find_strong_wormald_bisection_method(g1) is None
    none_d = find_strong_wormald_direct(g1) is None
    dt = time.perf_counter() - t0
    ok = not bad and g1.n == 28 and none_b and none_d
    return ok, f"{len(small)} T graphs, {len(bad)} bad; G_1 ({g1.n} vertices) no colouring: bisection {none_b}, direct {none_d} ({dt:.1f}s)"


def criterion_9():
    r = run_scan(_graphs(range(4, 15, 2)), "la", ScanParams(k=4))
    failed = {canonical_code(parse_graph6(w)) for s in r.orders.values() for w in s.witnesses}
    want = {canonical_code(g) for g in (k33(), prism(), heawood())}
    la5 = find_two_k_linear_forests(heawood(), 5)
    max4 = all(
        (ec := find_two_colouring_max4_edge_components(g)) is not None
        and max(sum(component_edge_counts(g, ec.colours), [])) <= 4
        for g in (k33(), prism(), heawood())
    )
    checked = 0
    for n in range(4, 15, 2):
        for g in connected_cubic(n):
            d = find_two_k_linear_forests(g, 5)
            check_path_invariants(g, d)  # raises on violation
            paths = d.paths[0] + d.paths[1]
            assert 2 * len(paths) == n and sum(paths) == 3 * len(paths)
            checked += 1
    ok = failed == want and la5 is not None and max4 and r.inconclusive == 0
    return ok, f"la_4 > 2 for {len(failed)} graphs (K33, prism, Heawood: {failed == want}); la_5(H) = 2: {la5 is not None}; <=4-edge colourings: {max4}; {checked} decompositions checked"


def criterion_10():
    r = run_scan(_graphs((12, 16)), "pair-removed", ScanParams())
    fails = _failures(r)
    (w12,) = r.orders[12].witnesses or [None]
    (w16,) = r.orders[16].witnesses or [None]
    ok12 = w12 is not None and canonical_code(parse_graph6(w12)) == canonical_code(triangle_expanded_k33())
    ok16 = w16 is not None and canonical_code(parse_graph6(w16)) == canonical_code(no_perfect_matching_16())
    no_pm = [g for g in connected_cubic(16) if not has_perfect_matching(g)]
    pm_ok = w16 is not None and len(no_pm) == 1 and canonical_code(no_pm[0]) == canonical_code(parse_graph6(w16))
    ok = fails == {12: 1, 16: 1} and ok12 and ok16 and pm_ok and r.inconclusive == 0
    return ok, f"failures {fails}; 12 is triangle-expanded K33: {ok12}; 16 is the graph without a perfect matching: {ok16 and pm_ok}"


def criterion_11():
    rng = random.Random(2024)
    notes = []
    ok = True
    # graph6 round trip
    for _ in range(10_000):
        n = rng.choice((4, 6, 8, 10, 12, 16, 20, 24, 30))
        g = SimpleGraph(n, random_cubic(n, rng.randrange(1 << 30)))
        if parse_graph6(write_graph6(g)) != g:
            ok = False
    notes.append("graph6 x10000")
    # canonical code under relabelling
    for _ in range(300):
        n = rng.choice((8, 10, 12, 16, 20))
        g = SimpleGraph(n, random_cubic(n, rng.randrange(1 << 30)))
        perm = list(range(n))
        rng.shuffle(perm)
        if canonical_code(g) != canonical_code(g.relabel(perm)):
            ok = False
    notes.append("relabel x300")
    # C(n,p), C(n,p^-1), C(n,p-bar) isomorphic
    for _ in range(1000):
        n = rng.choice((4, 5, 6, 7, 8, 9, 10, 11, 12))
        rest = list(range(1, n))
        rng.shuffle(rest)
        s = CpgSpec(n, (0, *rest))
        c = canonical_code(build_cpg(s))
        if canonical_code(build_cpg(s.inverse())) != c or canonical_code(build_cpg(s.bar())) != c:
            ok = False
    notes.append("cpg triple x1000")
    # derived vertex colouring of every Strong Wormald colouring found, n <= 14
    derived = 0
    for n in range(4, 15, 2):
        for g in connected_cubic(n):
            ec = find_strong_wormald(g)
            if ec is not None:
                derived += 1
                if not is_strong_ando(g, ando_from_wormald(g, ec)):
                    ok = False
    notes.append(f"derived bisections x{derived}")
    # oracle equivalence at n <= 10
    compared = 0
    for n in (4, 6, 8, 10):
        for g in connected_cubic(n):
            for k in (1, 2, 3):
                if (find_k_bisection(g, k) is not None) != brute_k_bisection(g, k):
                    ok = False
            if (find_ando(g) is not None) != brute_ando(g):
                ok = False
            compared += 1
    notes.append(f"oracle graphs x{compared}")
    return ok, ", ".join(notes)


CRITERIA = {i: globals()[f"criterion_{i}"] for i in range(1, 12)}


def _run(i: int) -> tuple[bool, str]:
    t0 = time.perf_counter()
    ok, detail = CRITERIA[i]()
    return ok, f"criterion {i}: {'PASS' if ok else 'FAIL'} - {detail} [{time.perf_counter() - t0:.1f}s]"


@pytest.mark.parametrize("i", range(1, 12))
def test_criterion(i, acceptance_log):
    ok, line = _run(i)
    acceptance_log.append(line)
    print(line)
    assert ok, line


if __name__ == "__main__":
    failed = 0
    for i in CRITERIA:
        ok, line = _run(i)
        print(line, flush=True)
        failed += not ok
    sys.exit(1 if failed else 0)
