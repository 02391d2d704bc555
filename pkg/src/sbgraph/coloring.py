"""Z_k-colorings of signed bi-graphs.

A k-coloring assigns each vertex a residue mod k so that ``c(v) != s*c(w)``
on every edge ``vw`` of sign ``s``. A parallel {+,-} pair therefore forbids
both ``c(w)`` and ``-c(w)`` at ``v``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd
from typing import Iterable, Mapping

from .core import GraphError, SignedBiGraph
from .signatures import is_antibalanced


@dataclass(frozen=True)
class Coloring:
    k: int
    assignment: Mapping[str, int]

    def __getitem__(self, v):
        return self.assignment[v]


@dataclass(frozen=True)
class PartiteSet:
    label: int
    members: frozenset


class Adjacency(Enum):
    NOT_COMPLETELY = "not-completely"
    COMPLETELY = "completely"
    JUST_COMPLETELY = "just-completely"
    BI_COMPLETELY = "bi-completely"


def is_valid_coloring(g: SignedBiGraph, c: Coloring) -> bool:
    k = c.k
    for v in g.vertices:
        if v not in c.assignment:
            raise GraphError(f"vertex {v!r} is not colored")
        if not 0 <= c.assignment[v] < k:
            raise GraphError(f"residue {c.assignment[v]} of {v!r} outside Z_{k}")
    for u, v, s in g.edges():
        if c.assignment[u] == (int(s) * c.assignment[v]) % k:
            return False
    return True


def _first_choices(k: int) -> list[int]:
    # Multiplying a coloring by a unit of Z_k keeps it valid, and every
    # residue is a unit multiple of some divisor of k (or of 0).
    return [0] + [d for d in range(1, k) if gcd(d, k) == d]


def exists_k_coloring(g: SignedBiGraph, k: int) -> Coloring | None:
    """Exact search for a k-coloring; None when there is none.

    Backtracking with forward checking on bitmask domains; the next vertex
    is the one with the fewest remaining residues, ties going to the vertex
    listed first.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    verts = g.vertices
    n = len(verts)
    if n == 0:
        return Coloring(k, {})
    idx = {v: i for i, v in enumerate(verts)}
    nbrs: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for u, v, s in g.edges():
        i, j = idx[u], idx[v]
        nbrs[i].append((j, int(s)))
        nbrs[j].append((i, int(s)))
    if k == 1:
        return Coloring(1, {v: 0 for v in verts}) if not any(nbrs) else None

    full = (1 << k) - 1
    color = [-1] * n
    first = 0
    for c in _first_choices(k):
        first |= 1 << c

    def pick(domains):
        best, best_count = -1, k + 1
        for i in range(n):
            if color[i] < 0:
                cnt = domains[i].bit_count()
                if cnt < best_count:
                    best, best_count = i, cnt
        return best

    def solve(domains, remaining):
        if remaining == 0:
            return True
        i = pick(domains)
        dom = domains[i]
        if remaining == n:
            dom &= first
        while dom:
            low = dom & -dom
            c = low.bit_length() - 1
            dom ^= low
            new = list(domains)
            ok = True
            for j, s in nbrs[i]:
                if color[j] < 0:
                    new[j] &= ~(1 << ((s * c) % k))
                    if not new[j]:
                        ok = False
                        break
            if not ok:
                continue
            color[i] = c
            if solve(new, remaining - 1):
                return True
            color[i] = -1
        return False

    if solve([full] * n, n):
        return Coloring(k, {v: color[idx[v]] for v in verts})
    return None


def optimal_coloring(g: SignedBiGraph) -> Coloring | None:
    """A coloring with the least k, or None for the empty graph."""
    n = g.order()
    if n == 0:
        return None
    upper = max(1, 2 * n - 2)
    for k in range(1, upper + 1):
        c = exists_k_coloring(g, k)
        if c is not None:
            return c
    raise AssertionError(f"no coloring within the bound {upper}; solver bug")


def chromatic_number(g: SignedBiGraph) -> int:
    c = optimal_coloring(g)
    return 0 if c is None else c.k


def magnitude_class(x: int, k: int) -> int:
    return min(x % k, (-x) % k)


def partite_sets(g: SignedBiGraph, c: Coloring) -> list[PartiteSet]:
    """Partition V by the residue class ``{x, -x}`` of each vertex's color."""
    if not is_valid_coloring(g, c):
        raise GraphError("coloring is not valid for this graph")
    groups: dict[int, set] = {}
    for v in g.vertices:
        groups.setdefault(magnitude_class(c[v], c.k), set()).add(v)
    return [PartiteSet(i, frozenset(groups[i])) for i in sorted(groups)]


def classify_adjacency(g: SignedBiGraph, us: Iterable[str], vs: Iterable[str]) -> Adjacency:
    us, vs = set(us), set(vs)
    if not us or not vs:
        raise GraphError("vertex sets must be nonempty")
    if us & vs:
        raise GraphError("vertex sets overlap")
    mults = {g.multiplicity(u, v) for u in us for v in vs}
    if 0 in mults:
        return Adjacency.NOT_COMPLETELY
    if mults == {2}:
        return Adjacency.BI_COMPLETELY
    if mults == {1}:
        return Adjacency.JUST_COMPLETELY
    return Adjacency.COMPLETELY


def is_independent_set(g: SignedBiGraph, us: Iterable[str]) -> bool:
    return g.induced(us).size() == 0


def is_antibalanced_set(g: SignedBiGraph, us: Iterable[str]) -> bool:
    return is_antibalanced(g.induced(us))
