import random
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from sbgraph import Coloring, GraphError, SignedBiGraph, chromatic_number, exists_k_coloring, is_valid_coloring
from sbgraph.coloring import (
    Adjacency,
    classify_adjacency,
    is_antibalanced_set,
    is_independent_set,
    magnitude_class,
    optimal_coloring,
    partite_sets,
)
from sbgraph.fuzz import random_bigraph

from oracles import brute_chromatic, brute_colorable

TRI = SignedBiGraph(["a", "b", "c"], [("a", "b", "+"), ("b", "c", "+"), ("c", "a", "-")])
K2PM = SignedBiGraph.complete(2, "pm")


def col(k, **kw):
    return Coloring(k, kw)


def test_valid_coloring_examples():
    assert is_valid_coloring(SignedBiGraph.complete(3), col(3, v1=0, v2=1, v3=2))
    assert is_valid_coloring(TRI, col(3, a=0, b=1, c=2))
    assert not is_valid_coloring(K2PM, col(2, v1=0, v2=0))


def test_valid_coloring_rejects_partial_or_out_of_range():
    with pytest.raises(GraphError):
        is_valid_coloring(K2PM, col(2, v1=0))
    with pytest.raises(GraphError):
        is_valid_coloring(K2PM, col(2, v1=0, v2=2))


def test_exists_k_coloring_examples():
    assert exists_k_coloring(SignedBiGraph.complete(3), 2) is None
    assert exists_k_coloring(TRI, 2) is None
    c = exists_k_coloring(TRI, 3)
    assert c is not None and is_valid_coloring(TRI, c)
    c = exists_k_coloring(K2PM, 2)
    assert c is not None and is_valid_coloring(K2PM, c)
    with pytest.raises(ValueError):
        exists_k_coloring(TRI, 0)


def test_chromatic_trivial_cases():
    assert chromatic_number(SignedBiGraph([], [])) == 0
    assert optimal_coloring(SignedBiGraph([], [])) is None
    assert chromatic_number(SignedBiGraph(["a"], [])) == 1
    assert chromatic_number(SignedBiGraph(["a", "b", "c"], [])) == 1


def test_deterministic_witness():
    g = random_bigraph(random.Random(1), 6)
    assert optimal_coloring(g) == optimal_coloring(g)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 5))
def test_matches_brute_force(seed, n):
    g = random_bigraph(random.Random(seed), n)
    assert chromatic_number(g) == brute_chromatic(g)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 6))
def test_monotone_in_k(seed, k):
    g = random_bigraph(random.Random(seed), 4)
    if exists_k_coloring(g, k) is not None:
        assert exists_k_coloring(g, k + 1) is not None


def test_magnitude_classes():
    assert magnitude_class(1, 5) == magnitude_class(4, 5)
    assert magnitude_class(2, 4) == 2
    assert magnitude_class(0, 5) == 0


def test_partite_sets():
    g = SignedBiGraph.complete(3)
    sets = partite_sets(g, col(3, v1=0, v2=1, v3=2))
    assert [s.members for s in sets] == [frozenset({"v1"}), frozenset({"v2", "v3"})]
    with pytest.raises(GraphError):
        partite_sets(g, col(3, v1=0, v2=0, v3=2))


def test_classify_adjacency():
    assert classify_adjacency(K2PM, ["v1"], ["v2"]) is Adjacency.BI_COMPLETELY
    assert classify_adjacency(SignedBiGraph.complete(2), ["v1"], ["v2"]) is Adjacency.JUST_COMPLETELY
    g = SignedBiGraph.complete(3).remove_edge("v1", "v3", "+")
    assert classify_adjacency(g, ["v1"], ["v2", "v3"]) is Adjacency.NOT_COMPLETELY
    mixed = K2PM.add_vertex("v3").add_signed_edge("v1", "v3", "+")
    assert classify_adjacency(mixed, ["v1"], ["v2", "v3"]) is Adjacency.COMPLETELY
    with pytest.raises(GraphError):
        classify_adjacency(g, ["v1"], ["v1"])


def test_independent_and_antibalanced_sets():
    assert is_independent_set(TRI, ["a"]) and is_antibalanced_set(TRI, ["a"])
    neg = SignedBiGraph.complete(2, "-")
    assert is_antibalanced_set(neg, ["v1", "v2"]) and not is_independent_set(neg, ["v1", "v2"])
    assert not is_antibalanced_set(K2PM, ["v1", "v2"])


@pytest.mark.parametrize("n", [2, 3])
def test_exhaustive_small_patterns(n):
    names = [f"v{i}" for i in range(1, n + 1)]
    pairs = [(a, b) for i, a in enumerate(names) for b in names[i + 1:]]
    for mult in product(range(4), repeat=len(pairs)):
        edges = []
        for (a, b), m in zip(pairs, mult):
            edges += [(a, b, s) for s, bit in (("+", 1), ("-", 2)) if m & bit]
        g = SignedBiGraph(names, edges)
        for k in range(1, 5):
            assert (exists_k_coloring(g, k) is not None) == brute_colorable(names, list(g.edges()), k)
