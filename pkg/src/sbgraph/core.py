"""Signed bi-graphs: loopless multigraphs with at most two parallel edges per
vertex pair, where parallel edges always carry opposite signs.

Graphs are immutable values. Every edit returns a new graph and leaves the
operand untouched, so derivations can keep all intermediates around.
"""

from __future__ import annotations

from enum import IntEnum
from typing import Iterable, Iterator, Mapping, NamedTuple

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher


class GraphError(ValueError):
    """Raised when an edit would break the signed bi-graph invariants."""


class Sign(IntEnum):
    POS = 1
    NEG = -1

    def __mul__(self, other):
        if isinstance(other, Sign):
            return Sign(int(self) * int(other))
        return int(self) * other

    __rmul__ = __mul__

    def __neg__(self):
        return Sign(-int(self))

    def __str__(self):
        return "+" if self is Sign.POS else "-"

    @classmethod
    def parse(cls, token: str | int | Sign) -> Sign:
        if isinstance(token, Sign):
            return token
        if token in ("+", 1, "+1"):
            return cls.POS
        if token in ("-", -1, "-1"):
            return cls.NEG
        raise ValueError(f"not a sign: {token!r}")


BOTH = frozenset((Sign.POS, Sign.NEG))


class Edge(NamedTuple):
    u: str
    v: str
    sign: Sign

    def __str__(self):
        return f"{self.u}{self.v}({self.sign})"


class SignedBiGraph:
    """A signed bi-graph on named vertices.

    Vertex names double as ids. Edges are identified by ``(u, v, sign)``;
    there are no separate edge ids. Equality ignores vertex order.
    """

    __slots__ = ("_vertices", "_adj", "_hash")

    def __init__(self, vertices: Iterable[str] = (), edges: Iterable = ()):
        verts: list[str] = []
        adj: dict[str, dict[str, frozenset]] = {}
        for v in vertices:
            _check_name(v)
            if v in adj:
                raise GraphError(f"duplicate vertex {v!r}")
            verts.append(v)
            adj[v] = {}
        for u, v, s in edges:
            s = Sign.parse(s)
            _check_edge(adj, u, v)
            have = adj[u].get(v, frozenset())
            if s in have:
                raise GraphError(f"duplicate {s} edge between {u!r} and {v!r}")
            adj[u][v] = adj[v][u] = have | {s}
        self._vertices = tuple(verts)
        self._adj = adj
        self._hash = None

    @classmethod
    def _raw(cls, vertices: tuple, adj: dict) -> SignedBiGraph:
        g = cls.__new__(cls)
        g._vertices = vertices
        g._adj = adj
        g._hash = None
        return g

    # -- constructors --------------------------------------------------------

    @classmethod
    def complete(cls, n: int, signs: str = "+", names: Iterable[str] | None = None) -> SignedBiGraph:
        """``(K_n,+)``, ``(K_n,-)`` or ``(K_n,±)`` for signs ``"+"``, ``"-"``, ``"pm"``."""
        names = tuple(names) if names is not None else tuple(f"v{i}" for i in range(1, n + 1))
        if len(names) != n:
            raise GraphError(f"expected {n} names, got {len(names)}")
        pair = {"+": frozenset((Sign.POS,)), "-": frozenset((Sign.NEG,)), "pm": BOTH}[signs]
        g = cls(names)
        adj = {v: {w: pair for w in names if w != v} for v in names}
        return cls._raw(g._vertices, adj)

    # -- queries -------------------------------------------------------------

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    def __len__(self):
        return len(self._vertices)

    def __contains__(self, v):
        return v in self._adj

    def __iter__(self):
        return iter(self._vertices)

    def order(self) -> int:
        return len(self._vertices)

    def size(self) -> int:
        return sum(len(s) for v in self._adj for s in self._adj[v].values()) // 2

    def edges(self) -> Iterator[Edge]:
        """Edges in vertex order, ``+`` before ``-`` on parallel pairs."""
        pos = {v: i for i, v in enumerate(self._vertices)}
        for u in self._vertices:
            for v in sorted(self._adj[u], key=pos.__getitem__):
                if pos[v] > pos[u]:
                    for s in sorted(self._adj[u][v], reverse=True):
                        yield Edge(u, v, s)

    def pairs(self) -> Iterator[tuple[str, str, frozenset]]:
        """Adjacent vertex pairs with their sign sets."""
        pos = {v: i for i, v in enumerate(self._vertices)}
        for u in self._vertices:
            for v in sorted(self._adj[u], key=pos.__getitem__):
                if pos[v] > pos[u]:
                    yield u, v, self._adj[u][v]

    def signs(self, u: str, v: str) -> frozenset:
        """The sign set of ``E(u, v)``."""
        self._require(u, v)
        if u == v:
            raise GraphError(f"{u!r} and {v!r} are the same vertex")
        return self._adj[u].get(v, frozenset())

    def multiplicity(self, u: str, v: str) -> int:
        return len(self.signs(u, v))

    def has_edge(self, u: str, v: str, sign) -> bool:
        return u in self._adj and Sign.parse(sign) in self._adj[u].get(v, ())

    def neighbors(self, v: str) -> tuple[str, ...]:
        self._require(v)
        pos = {w: i for i, w in enumerate(self._vertices)}
        return tuple(sorted(self._adj[v], key=pos.__getitem__))

    def incident(self, v: str) -> list[tuple[str, Sign]]:
        """``E(v)`` as (far endpoint, sign) pairs."""
        return [(w, s) for w in self.neighbors(v) for s in sorted(self._adj[v][w], reverse=True)]

    def adjacency(self) -> Mapping[str, Mapping[str, frozenset]]:
        return self._adj

    # -- edits ---------------------------------------------------------------

    def add_vertex(self, name: str) -> SignedBiGraph:
        _check_name(name)
        if name in self._adj:
            raise GraphError(f"duplicate vertex {name!r}")
        adj = self._copy_adj()
        adj[name] = {}
        return self._raw(self._vertices + (name,), adj)

    def add_signed_edge(self, u: str, v: str, sign) -> SignedBiGraph:
        sign = Sign.parse(sign)
        _check_edge(self._adj, u, v)
        have = self._adj[u].get(v, frozenset())
        if sign in have:
            raise GraphError(f"duplicate {sign} edge between {u!r} and {v!r}")
        adj = self._copy_adj()
        adj[u][v] = adj[v][u] = have | {sign}
        return self._raw(self._vertices, adj)

    def remove_edge(self, u: str, v: str, sign) -> SignedBiGraph:
        sign = Sign.parse(sign)
        if not self.has_edge(u, v, sign):
            raise GraphError(f"no {sign} edge between {u!r} and {v!r}")
        adj = self._copy_adj()
        rest = adj[u][v] - {sign}
        if rest:
            adj[u][v] = adj[v][u] = rest
        else:
            del adj[u][v], adj[v][u]
        return self._raw(self._vertices, adj)

    def remove_vertex(self, v: str) -> SignedBiGraph:
        self._require(v)
        adj = {w: {x: s for x, s in nb.items() if x != v} for w, nb in self._adj.items() if w != v}
        return self._raw(tuple(w for w in self._vertices if w != v), adj)

    def identify_vertices(self, u: str, v: str) -> SignedBiGraph:
        """Merge nonadjacent ``v`` into ``u``; ``u``'s name survives.

        Same-sign parallels created by the merge collapse to a single edge,
        which preserves every k-coloring.
        """
        self._require(u, v)
        if u == v:
            raise GraphError(f"cannot identify {u!r} with itself")
        if v in self._adj[u]:
            raise GraphError(f"{u!r} and {v!r} are adjacent")
        adj = {w: {x: s for x, s in nb.items() if x != v} for w, nb in self._adj.items() if w != v}
        for w, s in self._adj[v].items():
            merged = adj[u].get(w, frozenset()) | s
            adj[u][w] = adj[w][u] = merged
        return self._raw(tuple(w for w in self._vertices if w != v), adj)

    def rename(self, mapping: Mapping[str, str]) -> SignedBiGraph:
        new = [mapping.get(v, v) for v in self._vertices]
        if len(set(new)) != len(new):
            raise GraphError("renaming is not injective")
        for v in new:
            _check_name(v)
        adj = {mapping.get(v, v): {mapping.get(w, w): s for w, s in nb.items()} for v, nb in self._adj.items()}
        return self._raw(tuple(new), adj)

    def induced(self, vertices: Iterable[str]) -> SignedBiGraph:
        keep = set(vertices)
        self._require(*keep)
        adj = {v: {w: s for w, s in self._adj[v].items() if w in keep} for v in self._vertices if v in keep}
        return self._raw(tuple(v for v in self._vertices if v in keep), adj)

    def map_signs(self, flip) -> SignedBiGraph:
        """Negate the sign of each edge ``(u, v)`` for which ``flip(u, v)`` holds."""
        adj = {}
        for v, nb in self._adj.items():
            adj[v] = {w: (frozenset(-s for s in ss) if flip(v, w) else ss) for w, ss in nb.items()}
        return self._raw(self._vertices, adj)

    def union(self, other: SignedBiGraph) -> SignedBiGraph:
        """Disjoint union; the vertex sets must not meet."""
        shared = set(self._adj) & set(other._adj)
        if shared:
            raise GraphError(f"graphs share vertices: {sorted(shared)}")
        adj = self._copy_adj()
        adj.update(other._copy_adj())
        return self._raw(self._vertices + other._vertices, adj)

    # -- dunder --------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, SignedBiGraph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset((v, frozenset(nb.items())) for v, nb in self._adj.items()))
        return self._hash

    def __repr__(self):
        es = " ".join(str(e) for e in self.edges())
        return f"SignedBiGraph(V={list(self._vertices)}, E=[{es}])"

    def _copy_adj(self):
        return {v: dict(nb) for v, nb in self._adj.items()}

    def _require(self, *vs):
        for v in vs:
            if v not in self._adj:
                raise GraphError(f"unknown vertex {v!r}")


def _check_name(name):
    if not isinstance(name, str) or not name or any(c.isspace() for c in name) or "#" in name:
        raise GraphError(f"invalid vertex name {name!r}")


def _check_edge(adj, u, v):
    for w in (u, v):
        if w not in adj:
            raise GraphError(f"unknown vertex {w!r}")
    if u == v:
        raise GraphError(f"loop at {u!r}")


def reduce_multigraph(vertices: Iterable[str], edges: Iterable) -> SignedBiGraph:
    """Collapse a loopless signed multigraph to a signed bi-graph.

    Between each pair at most one edge of each sign is kept; colorings are
    unaffected because same-sign parallels impose identical constraints.
    """
    g = SignedBiGraph(vertices)
    adj = g._copy_adj()
    for u, v, s in edges:
        s = Sign.parse(s)
        _check_edge(adj, u, v)
        adj[u][v] = adj[v][u] = adj[u].get(v, frozenset()) | {s}
    return SignedBiGraph._raw(g.vertices, adj)


def to_networkx(g: SignedBiGraph, *, signs: bool = True) -> nx.Graph:
    """Simple nx graph with one edge per adjacent pair.

    The ``label`` attribute holds the sign set as a string, or just the
    multiplicity when ``signs`` is false.
    """
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    for u, v, ss in g.pairs():
        label = "".join(str(s) for s in sorted(ss, reverse=True)) if signs else str(len(ss))
        h.add_edge(u, v, label=label)
    return h


def _label_match(a, b):
    return a["label"] == b["label"]


def find_isomorphism(g: SignedBiGraph, h: SignedBiGraph) -> dict[str, str] | None:
    """A sign-preserving vertex bijection ``g -> h``, or None."""
    if g.order() != h.order() or g.size() != h.size():
        return None
    gm = GraphMatcher(to_networkx(g), to_networkx(h), edge_match=_label_match)
    if gm.is_isomorphic():
        return dict(gm.mapping)
    return None


def is_isomorphic(g: SignedBiGraph, h: SignedBiGraph) -> bool:
    return find_isomorphism(g, h) is not None


def underlying_isomorphisms(g: SignedBiGraph, h: SignedBiGraph) -> Iterator[dict[str, str]]:
    """All bijections ``g -> h`` that preserve multiplicities (signs ignored)."""
    if g.order() != h.order():
        return iter(())
    gm = GraphMatcher(to_networkx(g, signs=False), to_networkx(h, signs=False), edge_match=_label_match)
    return gm.isomorphisms_iter()


def invariant_hash(g: SignedBiGraph) -> str:
    """Isomorphism-invariant fingerprint (equal graphs up to iso hash equal)."""
    return nx.weisfeiler_lehman_graph_hash(to_networkx(g), edge_attr="label", iterations=3)
