"""Switching, sign products and balance.

A graph is balanced iff some switching makes every edge positive. We look
for that switching directly: give each vertex a state in {+1, -1} so that
``state[u] * state[v] == sign`` on every edge. A parallel {+,-} pair is a
2-circuit with one negative edge, so it rules out balance immediately.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable

from .core import BOTH, Edge, GraphError, Sign, SignedBiGraph


def switch_at(g: SignedBiGraph, v: str) -> SignedBiGraph:
    if v not in g:
        raise GraphError(f"unknown vertex {v!r}")
    return g.map_signs(lambda a, b: a == v or b == v)


def switch_set(g: SignedBiGraph, s: Iterable[str]) -> SignedBiGraph:
    """Switch at every vertex of ``s``: edges with exactly one end in ``s`` flip."""
    s = set(s)
    for v in s:
        if v not in g:
            raise GraphError(f"unknown vertex {v!r}")
    return g.map_signs(lambda a, b: (a in s) != (b in s))


def negate(g: SignedBiGraph) -> SignedBiGraph:
    return g.map_signs(lambda a, b: True)


def sign_product(g: SignedBiGraph, edges: Iterable) -> Sign:
    out = Sign.POS
    for u, v, s in edges:
        s = Sign.parse(s)
        if not g.has_edge(u, v, s):
            raise GraphError(f"edge {Edge(u, v, s)} is not in the graph")
        out = out * s
    return out


def _solve_states(g: SignedBiGraph, relation) -> dict[str, int] | None:
    """Propagate vertex states over each component.

    ``relation(u, v)`` returns the required product ``state[u]*state[v]``,
    or None when the pair imposes no constraint, or False when the pair is
    unsatisfiable on its own. Roots get state +1.
    """
    state: dict[str, int] = {}
    for root in g.vertices:
        if root in state:
            continue
        state[root] = 1
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                rel = relation(u, w)
                if rel is None:
                    continue
                if rel is False:
                    return None
                want = state[u] * rel
                if w not in state:
                    state[w] = want
                    queue.append(w)
                elif state[w] != want:
                    return None
    return state


def balancing_switch(g: SignedBiGraph) -> set[str] | None:
    """A switch set making ``g`` all-positive, or None if ``g`` is unbalanced."""
    adj = g.adjacency()

    def rel(u, w):
        ss = adj[u][w]
        if ss == BOTH:
            return False
        return int(next(iter(ss)))

    state = _solve_states(g, rel)
    if state is None:
        return None
    return {v for v, x in state.items() if x < 0}


def is_balanced(g: SignedBiGraph) -> bool:
    return balancing_switch(g) is not None


def is_antibalanced(g: SignedBiGraph) -> bool:
    return is_balanced(negate(g))


def are_switch_equivalent(g: SignedBiGraph, h: SignedBiGraph) -> set[str] | None:
    """A set ``S`` with ``switch_set(g, S) == h``, or None.

    Both graphs must have the same labelled vertices and the same
    multiplicity on every pair; otherwise GraphError.
    """
    if set(g.vertices) != set(h.vertices):
        raise GraphError("vertex sets differ")
    ga, ha = g.adjacency(), h.adjacency()
    for v in g.vertices:
        if {w: len(s) for w, s in ga[v].items()} != {w: len(s) for w, s in ha[v].items()}:
            raise GraphError(f"multiplicities differ at {v!r}")

    def rel(u, w):
        a, b = ga[u][w], ha[u][w]
        if len(a) == 2:
            return None
        return int(next(iter(a))) * int(next(iter(b)))

    state = _solve_states(g, rel)
    if state is None:
        return None
    return {v for v, x in state.items() if x < 0}
