import random

import pytest

from sbgraph import GraphError, Sign, SignedBiGraph
from sbgraph.fuzz import random_bigraph
from sbgraph.signatures import (
    are_switch_equivalent,
    balancing_switch,
    is_antibalanced,
    is_balanced,
    negate,
    sign_product,
    switch_at,
    switch_set,
)

TRI = SignedBiGraph(["a", "b", "c"], [("a", "b", "+"), ("b", "c", "+"), ("c", "a", "-")])


def test_switch_at_flips_incident_edges():
    g = switch_at(SignedBiGraph.complete(3), "v1")
    assert g.signs("v1", "v2") == {Sign.NEG}
    assert g.signs("v2", "v3") == {Sign.POS}
    assert switch_at(g, "v1") == SignedBiGraph.complete(3)


def test_switch_fixes_parallel_pairs():
    g = SignedBiGraph.complete(3, "pm")
    assert switch_at(g, "v2") == g


def test_switch_set_any_order():
    g = random_bigraph(random.Random(4), 6)
    s = ["v1", "v4", "v5"]
    assert switch_set(g, s) == switch_at(switch_at(switch_at(g, "v5"), "v1"), "v4")


def test_sign_product():
    assert sign_product(TRI, [("a", "b", "+"), ("b", "c", "+"), ("c", "a", "-")]) is Sign.NEG
    with pytest.raises(GraphError):
        sign_product(TRI, [("a", "b", "-")])


def test_balance():
    assert not is_balanced(TRI)
    assert is_balanced(SignedBiGraph.complete(4))
    assert is_balanced(switch_at(SignedBiGraph.complete(4), "v2"))
    assert not is_balanced(SignedBiGraph.complete(2, "pm"))
    assert is_antibalanced(SignedBiGraph.complete(3, "-"))
    assert not is_antibalanced(SignedBiGraph.complete(3, "+"))
    assert is_balanced(SignedBiGraph([], []))


def test_balancing_switch_makes_all_positive():
    g = switch_set(SignedBiGraph.complete(5), ["v2", "v3"])
    s = balancing_switch(g)
    assert switch_set(g, s) == SignedBiGraph.complete(5)
    assert balancing_switch(TRI) is None


def test_are_switch_equivalent():
    k = SignedBiGraph.complete(4)
    s = are_switch_equivalent(k, switch_at(k, "v3"))
    assert switch_set(k, s) == switch_at(k, "v3")
    assert are_switch_equivalent(TRI, TRI.map_signs(lambda u, v: {u, v} == {"a", "c"})) is None
    with pytest.raises(GraphError):
        are_switch_equivalent(k, SignedBiGraph.complete(3))


def test_negate_involution():
    g = random_bigraph(random.Random(9), 5)
    assert negate(negate(g)) == g
    assert is_antibalanced(g) == is_balanced(negate(g))
