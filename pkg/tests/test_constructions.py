import itertools
import math
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from hgt.constructions import (
    PARTS,
    all_pattern_homomorphisms,
    build_tensor_counterexample,
    density_estimates,
    enumerate_min_codegree_family,
    pattern_homomorphism,
    rb_construction,
    twelve_part_construction,
    twelve_part_pattern,
)
from hgt.core import ThreeGraph, blowup, codegree_stats, generate_named, is_isomorphic
from hgt.embed import contains
from hgt.errors import BadParams, TooLarge
from hgt.rng import SplitMix64

RB = 4 / 27


# -- red/blue -------------------------------------------------------------------


def test_rb_frozen():
    H = rb_construction(30, 1)
    assert H.num_edges == 632
    assert rb_construction(30, 1) == H
    assert rb_construction(30, 2) != H


def test_rb_matches_definition():
    n, seed = 12, 7
    rng = SplitMix64(seed)
    red = {p: rng.bernoulli(2, 3) for p in itertools.combinations(range(n), 2)}
    want = {(r, s, t) for r, s, t in itertools.combinations(range(n), 3)
            if red[(r, s)] and red[(r, t)] and not red[(s, t)]}
    assert set(rb_construction(n, seed).edges) == want


def test_rb_n3_frequency():
    hits = sum(rb_construction(3, s).num_edges for s in range(3000))
    assert abs(hits / 3000 - RB) < 0.02


@settings(max_examples=15)
@given(st.integers(0, 2**64 - 1))
def test_rb_is_k4_free(seed):
    res = contains(generate_named("K4-3"), rb_construction(25, seed))
    assert res.complete and not res.found


def test_rb_guard():
    with pytest.raises(BadParams):
        rb_construction(2, 0)


# -- twelve-part -------------------------------------------------------------------


def test_twelve_pattern_listing():
    P = twelve_part_pattern()
    assert len(P.triples) == 30
    assert sum(len(set(t)) < 3 for t in P.triples) == 12
    assert not any(len(set(t)) == 1 for t in P.triples)


def test_twelve_pair_coverage():
    P = twelve_part_pattern()
    cov = P.pair_coverage()
    assert len(cov) == math.comb(12, 2) + 12 == 78
    assert set(cov.values()) == {1}
    pairs = Counter()
    for t in P.triples:
        pairs.update({tuple(sorted(p)) for p in itertools.combinations(t, 2)})
    assert 12 * 2 + 18 * 3 == sum(pairs.values()) == 78


def test_twelve_graph_shape():
    P, H = twelve_part_construction(2)
    assert H.n == 24 and H.names[0] == "A0"
    for e in H.edges:
        assert tuple(sorted(x // 2 for x in e)) in P.triple_set
    with pytest.raises(BadParams):
        twelve_part_construction(0)
    with pytest.raises(TooLarge) as ex:
        twelve_part_construction(40)
    assert ex.value.size > 10**6


@pytest.mark.parametrize("m", range(3, 9))
def test_twelve_min_codegree(m):
    # the worst pairs sit in X, Y with triple XXY: coneighbors are X minus one vertex
    _, H = twelve_part_construction(m)
    assert codegree_stats(H)[0] == m - 1 >= m - 2


def test_homomorphisms_as_claimed():
    P = twelve_part_pattern()
    F1, F2, F = (generate_named(x) for x in ("F1", "F2", "F"))
    first5 = {PARTS.index(c) for c in "ABCDE"}
    h1 = all_pattern_homomorphisms(F1, P)
    h2 = all_pattern_homomorphisms(F2, P)
    assert h1 and all(h[F1.index("e")] in first5 for h in h1)
    assert h2 and all(h[F2.index("e")] not in first5 for h in h2)
    assert pattern_homomorphism(F, P) is None


def test_homomorphism_gives_embedding():
    P = twelve_part_pattern()
    F1 = generate_named("F1")
    h = pattern_homomorphism(F1, P)
    m = F1.n
    _, H = twelve_part_construction(m)
    used = Counter()
    mapping = {}
    for v in range(F1.n):
        mapping[v] = h[v] * m + used[h[v]]
        used[h[v]] += 1
    assert all(H.has_edge(*(mapping[x] for x in e)) for e in F1.edges)


def test_concrete_instances():
    _, H = twelve_part_construction(1)
    res = contains(generate_named("F"), H)
    assert res.complete and not res.found
    _, H = twelve_part_construction(3)
    assert contains(generate_named("F1"), H).found
    assert contains(generate_named("F2"), H).found


# -- family and tensor -------------------------------------------------------------------


def test_family_examples():
    assert enumerate_min_codegree_family(3) == []
    fam4 = enumerate_min_codegree_family(4)
    assert len(fam4) == 1 and is_isomorphic(fam4[0], generate_named("K4-3"))
    with pytest.raises(TooLarge):
        enumerate_min_codegree_family(6)


def test_family_five():
    fam = enumerate_min_codegree_family(5)
    assert len(fam) == 3
    assert sorted(F.num_edges for F in fam) == [8, 9, 10]
    for F in fam:
        assert codegree_stats(F)[0] >= 2
    for a, b in itertools.combinations(fam, 2):
        assert not is_isomorphic(a, b)


def test_tensor_counterexample():
    K4 = generate_named("K4-3")
    assert is_isomorphic(build_tensor_counterexample(4), K4)
    with pytest.raises(BadParams):
        build_tensor_counterexample(3)
    res = contains(build_tensor_counterexample(4), rb_construction(30, 3))
    assert res.complete and not res.found


def test_tensor_five_size():
    T = build_tensor_counterexample(5)
    assert T.n == 5**3
    assert T.num_edges == 8 * 9 * 10 * 6 * 6


def test_tensor_lies_in_blowup():
    # the product embeds in a k^(l-1)-blowup of each factor
    K4 = generate_named("K4-3")
    T = build_tensor_counterexample(4)
    assert contains(T, blowup(K4, 1)).found


# -- density ---------------------------------------------------------------------------


def test_density_complete_graph():
    K = ThreeGraph(8, itertools.combinations(range(8), 3))
    rep = density_estimates(K, 50, 0.25, 1)
    assert rep.edge_density == 1 and rep.uniform_estimate.d_hat == 1
    assert rep.min_codegree == 6


def test_density_report_text():
    rep = density_estimates(rb_construction(20, 0), 10, 0.5, 3)
    kv = dict(line.split("=") for line in rep.as_text().splitlines())
    assert set(kv) == {"edge_density", "min_codegree", "uniform_d_hat", "uniform_samples",
                       "uniform_min_frac", "uniform_seed"}
    assert kv["uniform_samples"] == "10" and kv["uniform_seed"] == "3"
    assert density_estimates(rb_construction(20, 0)).uniform_estimate is None


def test_density_errors():
    H = rb_construction(10, 0)
    with pytest.raises(BadParams):
        density_estimates(H, 0)
    with pytest.raises(BadParams):
        density_estimates(H, 5, 0)


@settings(max_examples=20)
@given(st.integers(5, 20), st.integers(0, 1000), st.floats(0.1, 1.0))
def test_density_invariants(n, seed, frac):
    H = rb_construction(n, seed)
    rep = density_estimates(H, 5, frac, seed)
    assert 0 <= rep.edge_density <= 1
    assert 0 <= rep.uniform_estimate.d_hat <= 1
    assert rep.min_codegree <= n - 2
    assert density_estimates(H, 5, frac, seed) == rep


def test_rb_density_near_target():
    H = rb_construction(60, 0)
    rep = density_estimates(H, 200, 0.25, 0)
    assert abs(rep.edge_density - RB) < 0.04
    assert rep.uniform_estimate.d_hat >= RB - 0.05
