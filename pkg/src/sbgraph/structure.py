"""Structural predicates: completeness classes, thinness, nabla-completeness
and triples with their codes."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable

from .core import Sign, SignedBiGraph

SIGNS = (Sign.POS, Sign.NEG)


@dataclass(frozen=True)
class TripleCode:
    x: str
    y: str
    z: str
    codes: tuple[tuple[Sign, Sign, Sign], ...]


def _mults(g: SignedBiGraph):
    adj = g.adjacency()
    for u, v in combinations(g.vertices, 2):
        yield u, v, len(adj[u].get(v, ()))


def is_bi_complete(g: SignedBiGraph) -> bool:
    return all(m == 2 for _, _, m in _mults(g))


def is_just_complete(g: SignedBiGraph) -> bool:
    return all(m == 1 for _, _, m in _mults(g))


def is_complete(g: SignedBiGraph) -> bool:
    return all(m >= 1 for _, _, m in _mults(g))


def completeness_class(g: SignedBiGraph) -> str:
    if is_bi_complete(g):
        return "bi-complete"
    if is_just_complete(g):
        return "just-complete"
    if is_complete(g):
        return "complete"
    return "incomplete"


def deficient_pairs(g: SignedBiGraph) -> list[tuple[str, str]] | None:
    """Pairs with multiplicity 1, or None if some pair has multiplicity 0."""
    out = []
    for u, v, m in _mults(g):
        if m == 0:
            return None
        if m == 1:
            out.append((u, v))
    return out


def thinness(g: SignedBiGraph) -> int | None:
    """Least k for which ``g`` is k-thin, or None if it is k-thin for no k.

    k-thin means bi-complete minus at most k pairwise vertex-disjoint edges.
    Parallel edges share both ends, so at most one edge per pair can go.
    """
    pairs = deficient_pairs(g)
    if pairs is None:
        return None
    seen: set[str] = set()
    for u, v in pairs:
        if u in seen or v in seen:
            return None
        seen.update((u, v))
    return len(pairs)


def is_k_thin(g: SignedBiGraph, k: int) -> bool:
    if k < 0:
        return False
    t = thinness(g)
    return t is not None and t <= k


def nabla_graph(r: int, names: Iterable[str] | None = None) -> SignedBiGraph:
    """``(K_3r, ±)`` minus r disjoint all-positive triangles.

    Triangles are consecutive name triples.
    """
    names = tuple(names) if names is not None else tuple(f"v{i}" for i in range(1, 3 * r + 1))
    g = SignedBiGraph.complete(3 * r, "pm", names)
    for t in range(r):
        a, b, c = names[3 * t: 3 * t + 3]
        for u, v in ((a, b), (a, c), (b, c)):
            g = g.remove_edge(u, v, Sign.POS)
    return g


def is_nabla_complete(g: SignedBiGraph) -> list[frozenset] | None:
    """The triangle partition witnessing nabla-completeness, or None.

    Deficient pairs determine the triangles: every vertex must lie in
    exactly two of them, both negative, closing up into disjoint triangles.
    """
    n = g.order()
    if n == 0 or n % 3:
        return None
    pairs = deficient_pairs(g)
    if pairs is None:
        return None
    adj = g.adjacency()
    partner: dict[str, set] = {v: set() for v in g.vertices}
    for u, v in pairs:
        if adj[u][v] != frozenset((Sign.NEG,)):
            return None
        partner[u].add(v)
        partner[v].add(u)
    triangles = []
    done: set[str] = set()
    for v in g.vertices:
        if len(partner[v]) != 2:
            return None
        if v in done:
            continue
        tri = frozenset({v} | partner[v])
        for w in tri:
            if partner[w] != tri - {w}:
                return None
        triangles.append(tri)
        done |= tri
    return triangles


def triple_codes(g: SignedBiGraph, x: str, y: str, z: str) -> tuple[tuple[Sign, Sign, Sign], ...]:
    """All codes (a, b, c) of the sequence (x, y, z); empty if it is no triple."""
    xy, xz, yz = g.signs(x, y), g.signs(x, z), g.signs(y, z)
    out = []
    for a in SIGNS:
        for b in SIGNS:
            c = a * b
            if a not in xy and b not in xz and c in yz:
                out.append((a, b, c))
    return tuple(out)


def find_triples(g: SignedBiGraph) -> list[TripleCode]:
    out = []
    for x, y, z in permutations(g.vertices, 3):
        codes = triple_codes(g, x, y, z)
        if codes:
            out.append(TripleCode(x, y, z, codes))
    return out
