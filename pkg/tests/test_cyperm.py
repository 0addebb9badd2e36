from __future__ import annotations

import itertools
import logging
import random

import pytest

from bisectlab.bisection import B, W, find_k_bisection, verify_k_bisection
from bisectlab.cyperm import (
    CpgSpec,
    GoodConfiguration,
    PetersenException,
    all_specs,
    build_cpg,
    build_gp,
    colour_from_good_configuration,
    find_good_configuration,
    gap,
    gp_spec,
    inverse_gap,
    normalize,
    two_bisection_cpg,
    validate_good_configuration,
)
from bisectlab.families import petersen, prism
from bisectlab.graphcore import canonical_code, proper_3_edge_colouring

PETERSEN = CpgSpec(5, (0, 2, 4, 1, 3))


def _random_spec(rng: random.Random, n: int) -> CpgSpec:
    rest = list(range(1, n))
    rng.shuffle(rest)
    return CpgSpec(n, (0, *rest))


def _remaining_class(n: int):
    """Normalized specs with all gaps even (and not 1), all inverse gaps odd."""
    p = [0]
    used = {0}

    def rec():
        if len(p) == n:
            if (-p[-1]) % n % 2 == 0:
                s = CpgSpec(n, tuple(p))
                if all(inverse_gap(s, i) % 2 for i in range(n)):
                    yield s
            return
        for d in range(2, n - 1, 2):
            x = (p[-1] + d) % n
            if x not in used:
                used.add(x)
                p.append(x)
                yield from rec()
                p.pop()
                used.discard(x)

    yield from rec()


def test_build_sizes_and_identity_prism():
    for n in (4, 5, 7):
        g = build_cpg(CpgSpec(n, tuple(range(n))))
        assert g.n == 2 * n and g.m == 3 * n
        assert canonical_code(g) == canonical_code(prism(n))


def test_petersen_spec():
    assert canonical_code(build_cpg(PETERSEN)) == canonical_code(petersen())
    assert canonical_code(build_gp(5, 2)) == canonical_code(petersen())
    assert [gap(PETERSEN, i) for i in range(5)] == [2] * 5
    assert all(inverse_gap(PETERSEN, i) % 2 for i in range(5))
    assert normalize(PETERSEN).spec == PETERSEN


def test_bad_specs():
    with pytest.raises(ValueError):
        CpgSpec(5, (0, 1, 1, 2, 3))
    with pytest.raises(ValueError):
        build_gp(6, 3)
    with pytest.raises(ValueError):
        gp_spec(6, 2)


def test_gp_examples():
    assert proper_3_edge_colouring(build_gp(7, 3)) is not None
    s = gp_spec(9, 2)
    assert s.p == (0, 2, 4, 6, 8, 1, 3, 5, 7)
    assert canonical_code(build_cpg(s)) == canonical_code(build_gp(9, 2))


def test_gap_partition():
    rng = random.Random(3)
    for _ in range(100):
        s = _random_spec(rng, rng.choice((5, 7, 9, 11)))
        for i in range(s.n):
            back = (s.p[i] - s.p[(i + 1) % s.n]) % s.n
            assert gap(s, i) + back == s.n


def test_triple_isomorphism_random_specs():
    rng = random.Random(11)
    for _ in range(1000):
        s = _random_spec(rng, rng.choice((4, 5, 6, 7, 8, 9, 10, 11)))
        c = canonical_code(build_cpg(s))
        assert canonical_code(build_cpg(s.inverse())) == c
        assert canonical_code(build_cpg(s.bar())) == c


def test_normalize_makes_p1_even_and_preserves_graph():
    rng = random.Random(5)
    for _ in range(200):
        n = rng.choice((5, 7, 9, 11))
        perm = list(range(n))
        rng.shuffle(perm)
        s = CpgSpec(n, tuple(perm))
        norm = normalize(s)
        assert norm.spec.p[0] == 0 and norm.spec.p[1] % 2 == 0
        g, h = build_cpg(s), build_cpg(norm.spec)
        phi = norm.vertex_map
        assert all(g.has_edge(phi[u], phi[v]) for u, v in h.edges)


def test_normalize_reflects_odd_p1():
    s = CpgSpec(7, (0, 3, 1, 5, 2, 6, 4))
    norm = normalize(s)
    assert norm.spec.p[1] % 2 == 0 and "reflect outer" in norm.steps


def test_remark_parity_properties():
    # (i) all gaps even: outer path between consecutive spoke feet is even;
    # (ii) all inverse gaps odd: inner path between spokes of consecutive outer vertices is odd
    for s in _remaining_class(9):
        q = s.inverse().p
        for i in range(s.n):
            assert (s.p[(i + 1) % s.n] - s.p[i]) % s.n % 2 == 0
            assert (q[(s.p[i] + 1) % s.n] - i) % s.n % 2 == 1


def test_gp92_has_no_good_configuration():
    assert find_good_configuration(normalize(gp_spec(9, 2)).spec) is None
    res = two_bisection_cpg(gp_spec(9, 2))
    assert verify_k_bisection(build_cpg(gp_spec(9, 2)), res.colouring, 2)


def test_good_configuration_preconditions():
    with pytest.raises(ValueError):
        find_good_configuration(CpgSpec(6, (0, 2, 4, 1, 3, 5)))
    with pytest.raises(ValueError):
        find_good_configuration(CpgSpec(7, (0, 1, 2, 3, 4, 5, 6)))


def _odd_good_specs(n):
    for s in all_specs(n):
        s = normalize(s).spec
        gaps = [gap(s, i) for i in range(n)]
        if 1 in gaps or n - 1 in gaps:
            continue
        yield s


@pytest.mark.parametrize("n", [7, 9])
def test_good_configuration_colourings(n):
    sources = set()
    for s in itertools.islice(_odd_good_specs(n), 0, None, 7):
        found = find_good_configuration(s)
        if found is None:
            continue
        gc, src = found
        sources.add(src)
        assert validate_good_configuration(s, gc)
        c = colour_from_good_configuration(s, gc)
        assert verify_k_bisection(build_cpg(s), c, 2)
        outer, inner = c[:n], c[n:]
        assert sum(outer[i] == outer[(i + 1) % n] == W for i in range(n)) == 1
        assert sum(inner[i] == inner[(i + 1) % n] == B for i in range(n)) == 1
        assert outer.count(W) == outer.count(B) + 1
    if n == 9:
        assert {"odd-gap", "even-inverse-gap"} <= sources


def test_odd_gap_construction_is_used_without_scan():
    for s in _odd_good_specs(9):
        if any(gap(s, i) % 2 for i in range(s.n)):
            assert find_good_configuration(s)[1] == "odd-gap"


def test_invalid_good_configuration_rejected():
    s = normalize(gp_spec(9, 2)).spec
    gc = GoodConfiguration(0, 1, 2, 9, 10, 11)
    assert not validate_good_configuration(s, gc)
    with pytest.raises(ValueError):
        colour_from_good_configuration(s, gc)


def test_petersen_raises():
    with pytest.raises(PetersenException):
        two_bisection_cpg(PETERSEN)


@pytest.mark.parametrize("n", [11, 13])
def test_type_construction_without_fallback(n, caplog):
    kinds = set()
    with caplog.at_level(logging.WARNING, logger="bisectlab"):
        for s in _remaining_class(n):
            res = two_bisection_cpg(s)
            assert verify_k_bisection(build_cpg(s), res.colouring, 2)
            assert not res.fallback
            kinds.add(res.method)
            if res.method.startswith("type"):
                outer, inner = res.colouring[:n], res.colouring[n:]
                # in normalized labels the outer cycle carries one more white
                assert sum(outer) == (n + 1) // 2 and sum(inner) == (n - 1) // 2
    assert kinds & {"type-I", "type-II"}


@pytest.mark.parametrize("n", [4, 6, 8])
def test_even_n(n):
    rng = random.Random(n)
    for _ in range(20):
        s = _random_spec(rng, n)
        res = two_bisection_cpg(s)
        assert res.method == "even-n" and verify_k_bisection(build_cpg(s), res.colouring, 2)


def test_all_specs_n7_against_general_solver():
    for s in all_specs(7):
        res = two_bisection_cpg(s)
        assert not res.fallback
        assert find_k_bisection(build_cpg(s), 2) is not None
