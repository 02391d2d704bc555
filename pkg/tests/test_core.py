import pytest
from hypothesis import given, strategies as st

from sbgraph import Edge, GraphError, Sign, SignedBiGraph, reduce_multigraph
from sbgraph.core import find_isomorphism, invariant_hash, is_isomorphic


def test_sign_arithmetic():
    assert Sign.POS * Sign.NEG is Sign.NEG
    assert Sign.NEG * Sign.NEG is Sign.POS
    assert -Sign.POS is Sign.NEG
    assert str(Sign.NEG) == "-"
    assert Sign.parse("+") is Sign.POS and Sign.parse(-1) is Sign.NEG
    with pytest.raises(ValueError):
        Sign.parse("x")


def test_complete_graphs():
    assert SignedBiGraph.complete(4).size() == 6
    assert SignedBiGraph.complete(4, "pm").size() == 12
    g = SignedBiGraph.complete(3, "-", ["a", "b", "c"])
    assert g.vertices == ("a", "b", "c")
    assert g.signs("a", "c") == {Sign.NEG}


def test_parallel_pair_allowed_third_edge_rejected():
    g = SignedBiGraph(["u", "v"], [("u", "v", "+")]).add_signed_edge("v", "u", "-")
    assert g.multiplicity("u", "v") == 2
    with pytest.raises(GraphError):
        g.add_signed_edge("u", "v", "+")


def test_validation():
    with pytest.raises(GraphError):
        SignedBiGraph(["u"], [("u", "u", "+")])
    with pytest.raises(GraphError):
        SignedBiGraph(["u", "u"], [])
    with pytest.raises(GraphError):
        SignedBiGraph(["u"], [("u", "w", "+")])
    with pytest.raises(GraphError):
        SignedBiGraph(["a b"], [])


def test_value_semantics():
    g = SignedBiGraph.complete(3)
    h = g.add_vertex("x")
    assert "x" not in g and "x" in h
    same = SignedBiGraph(["v3", "v1", "v2"], [("v2", "v1", "+"), ("v3", "v1", "+"), ("v2", "v3", "+")])
    assert g == same and hash(g) == hash(same)


def test_edges_ordered():
    g = SignedBiGraph(["a", "b"], [("a", "b", "-"), ("a", "b", "+")])
    assert list(g.edges()) == [Edge("a", "b", Sign.POS), Edge("a", "b", Sign.NEG)]


def test_identify_coalesces_duplicates():
    g = SignedBiGraph(["a", "b", "c"], [("a", "c", "+"), ("b", "c", "+"), ("b", "c", "-")])
    h = g.identify_vertices("a", "b")
    assert h.vertices == ("a", "c")
    assert h.signs("a", "c") == {Sign.POS, Sign.NEG}
    with pytest.raises(GraphError):
        g.identify_vertices("a", "c")


def test_remove_and_induced():
    g = SignedBiGraph.complete(4, "pm")
    assert g.remove_vertex("v1").order() == 3
    assert g.remove_edge("v1", "v2", "+").signs("v1", "v2") == {Sign.NEG}
    with pytest.raises(GraphError):
        g.remove_edge("v1", "v2", "+").remove_edge("v1", "v2", "+")
    assert g.induced(["v1", "v2"]) == SignedBiGraph.complete(2, "pm", ["v1", "v2"])


def test_reduce_multigraph():
    g = reduce_multigraph(["a", "b", "c"], [("a", "b", "+"), ("b", "a", "+"), ("a", "b", "-"), ("b", "c", "-")])
    assert g.size() == 3
    with pytest.raises(GraphError):
        reduce_multigraph(["a"], [("a", "a", "+")])


def test_isomorphism_respects_signs():
    g = SignedBiGraph(["a", "b", "c"], [("a", "b", "+"), ("b", "c", "-")])
    h = SignedBiGraph(["x", "y", "z"], [("y", "z", "+"), ("x", "y", "-")])
    m = find_isomorphism(g, h)
    assert m is not None and g.rename(m) == h
    assert not is_isomorphic(g, h.map_signs(lambda u, v: {u, v} == {"y", "z"}))
    assert invariant_hash(g) == invariant_hash(h)


@given(st.permutations(["p", "q", "r", "s"]))
def test_rename_gives_isomorphic(perm):
    g = SignedBiGraph(["p", "q", "r", "s"], [("p", "q", "+"), ("p", "q", "-"), ("q", "r", "-"), ("r", "s", "+")])
    h = g.rename(dict(zip(g.vertices, perm)))
    assert is_isomorphic(g, h)
    assert invariant_hash(g) == invariant_hash(h)
