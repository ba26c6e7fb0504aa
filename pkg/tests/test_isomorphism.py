"""Canonical form and isomorphism, checked two independent ways.

The class counts pin exactness globally: a canonical form that merged
two classes would undercount, one that split a class would overcount,
and the expected values are a well-known published sequence.  The
permutation oracle then confirms individual verdicts.
"""

import itertools
import random
from collections import defaultdict

import polycensus as pc
from polycensus import CanonicalForm, canonical_form
from tests.oracles import (
    GRAPH_CLASS_COUNTS,
    all_graphs_up_to_iso,
    brute_certificate,
    brute_isomorphic,
    shuffled,
)


def test_class_counts_match_published_sequence():
    for p, expected in GRAPH_CLASS_COUNTS.items():
        assert len(all_graphs_up_to_iso(p)) == expected


def test_certificate_embeds_order_and_size():
    cf = canonical_form(pc.cycle(5))
    assert cf.p == 5
    assert cf.q == 5
    assert CanonicalForm.from_hex(cf.hex) == cf


def test_relabeling_invariance():
    rng = random.Random(42)
    cube = pc.Graph.from_edges(
        8,
        [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4),
         (0, 4), (1, 5), (2, 6), (3, 7)],
    )
    base = canonical_form(cube)
    for _ in range(100):
        assert canonical_form(shuffled(cube, rng)) == base


def test_nonisomorphic_same_parameter_pairs(universe):
    """Same order, size, and degree sequence; still told apart.

    The universe holds one representative per class, so every pair
    inside a bucket must be non-isomorphic.  The permutation oracle
    confirms each verdict the certificates imply.
    """
    buckets = defaultdict(list)
    for g in universe:
        if g.p >= 4:
            buckets[g.p, g.q, tuple(g.degree_sequence())].append(g)
    pairs = 0
    for key in sorted(buckets):
        for a, b in itertools.combinations(buckets[key], 2):
            assert canonical_form(a) != canonical_form(b)
            assert not pc.are_isomorphic(a, b)
            assert not brute_isomorphic(a, b), key
            pairs += 1
    assert pairs > 3000  # p <= 7 gives 3375 same-invariant pairs


def test_positive_pairs_against_oracle(universe):
    rng = random.Random(7)
    for g in universe[::5]:
        h = shuffled(g, rng)
        assert pc.are_isomorphic(g, h)
        assert brute_isomorphic(g, h)


def test_oracle_agreement_sampled_order_8():
    # same-degree-row pairs from the (8,14) census: the hard negatives
    rng = random.Random(814)
    graphs = pc.filter_by_degree_sequence(
        pc.enumerate_polyhedra(8, 14), pc.DegreeSequence.from_compact("44443333")
    )
    pairs = list(itertools.combinations(graphs, 2))
    for a, b in rng.sample(pairs, 25):
        assert not brute_isomorphic(a, b)
        assert not pc.are_isomorphic(a, b)
    for g in rng.sample(list(graphs), 8):
        h = shuffled(g, rng)
        assert brute_isomorphic(g, h)
        assert pc.are_isomorphic(g, h)


def test_brute_certificate_equivalence():
    """The min-over-permutations certificate induces the same classes.

    Bytes differ by construction; the partition they induce must not.
    """
    for p in (4, 5):
        seen = {}
        for g in all_graphs_up_to_iso(p):
            bc = brute_certificate(g)
            assert bc not in seen
            seen[bc] = g
        assert len(seen) == GRAPH_CLASS_COUNTS[p]
    rng = random.Random(65)
    for g in all_graphs_up_to_iso(6)[::13]:
        assert brute_certificate(g) == brute_certificate(shuffled(g, rng))


def test_c8_vs_two_squares():
    # both 2-regular on 8 vertices; only one is connected
    c8 = pc.cycle(8)
    squares = pc.Graph.from_edges(
        8, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4)]
    )
    assert canonical_form(c8) != canonical_form(squares)
    assert not pc.are_isomorphic(c8, squares)
    assert not brute_isomorphic(c8, squares)


def test_are_isomorphic_trivia():
    assert not pc.are_isomorphic(pc.complete(4), pc.cycle(4))
    assert not pc.are_isomorphic(pc.cycle(4), pc.cycle(5))
    g = pc.wheel(5)
    assert pc.are_isomorphic(g, g.relabel((5, 4, 3, 2, 1, 0)))


def test_is_self_complementary():
    assert pc.is_self_complementary(pc.cycle(5))
    assert pc.is_self_complementary(pc.path(4))
    assert not pc.is_self_complementary(pc.complete(4))
    assert not pc.is_self_complementary(pc.empty_graph(6))


def test_self_complementary_needs_quarter_of_pairs(universe):
    for g in universe:
        if pc.is_self_complementary(g):
            assert 4 * g.q == g.p * (g.p - 1)
            assert g.p % 4 in (0, 1)
