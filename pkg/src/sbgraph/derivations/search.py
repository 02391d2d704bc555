"""Breadth-first search for short derivations of a given graph.

States are single graphs; (sb3) always glues in a fresh axiom copy, so every
found derivation is a chain. States are deduplicated up to isomorphism.
Not finding anything within the budget proves nothing.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from itertools import combinations

from ..coloring import chromatic_number
from ..core import Sign, SignedBiGraph, find_isomorphism, invariant_hash
from ..hajos import (
    AddEdge,
    AddVertex,
    Axiom,
    Contract,
    Identify,
    OperationError,
    RemoveVertex,
    Splice,
    Step,
    Switch,
    apply_step,
    suggest_pad,
)
from .checker import check
from .script import DerivationScript, Target

CUR, AX = "_", "_ax"


@dataclass
class _Node:
    graph: SignedBiGraph
    parent: "_Node | None"
    step: Step | None
    axiom: Axiom | None
    depth: int


def _subsets(items):
    for t in range(len(items) + 1):
        yield from combinations(items, t)


def _moves(g: SignedBiGraph, q: int, depth: int, size_cap: int):
    """Candidate ``(step, extra_axiom)`` pairs in a fixed order."""
    verts = g.vertices
    n = len(verts)
    k = q - 1
    for v in verts:
        yield Switch(CUR, v), None
    for u, v in combinations(verts, 2):
        ss = g.signs(u, v)
        if not ss:
            yield Identify(CUR, u, v), None
        for s in (Sign.POS, Sign.NEG):
            if s not in ss:
                yield AddEdge(CUR, u, v, s), None
    if k >= 2 and k % 2 == 0:
        for v in verts:
            yield RemoveVertex(CUR, v), None
    if k >= 3 and k % 2 == 1:
        for u, w in combinations(verts, 2):
            if g.signs(u, w) == frozenset((Sign.NEG,)):
                yield Contract(CUR, u, w, tuple(suggest_pad(g, u, w, k))), None
    if n < size_cap:
        i = 1
        while f"n{i}" in g:
            i += 1
        yield AddVertex(CUR, f"n{i}"), None
    if n - 1 + q <= size_cap:
        names = tuple(f"a{depth}.{i}" for i in range(1, q + 1))
        ax = Axiom(q, names)
        for v in verts:
            for split in _subsets(g.incident(v)):
                yield Splice(CUR, v, tuple(split), AX, names[0], names[1]), ax
        hub_edges = [(w, Sign.POS) for w in names[1:]]
        for x, y, ss in g.pairs():
            if Sign.POS in ss:
                for t in range(len(hub_edges) + 1):
                    yield Splice(AX, names[0], tuple(hub_edges[:t]), CUR, x, y), ax


def _bind(step: Step, cur: str, ax: str | None) -> Step:
    changes = {}
    for f in ("src", "a", "b"):
        if hasattr(step, f):
            val = getattr(step, f)
            changes[f] = cur if val == CUR else ax if val == AX else val
    return dataclasses.replace(step, **changes)


def search_derivation(
    target: SignedBiGraph,
    q: int,
    step_budget: int,
    size_cap: int,
    node_limit: int = 50_000,
    target_source: str | None = None,
) -> DerivationScript | None:
    """A checked script deriving ``target`` (up to isomorphism) from
    ``(K_q, +)`` in at most ``step_budget`` operation steps, or None."""
    if step_budget < 0 or size_cap < 1:
        raise ValueError("budgets must be positive")
    chi = chromatic_number(target)
    if chi != q:
        raise ValueError(f"target has chromatic number {chi}, not {q}")

    root = _Node(SignedBiGraph.complete(q), None, None, None, 0)
    seen: dict[str, list[SignedBiGraph]] = {invariant_hash(root.graph): [root.graph]}
    found = root if find_isomorphism(root.graph, target) else None
    frontier = [root]
    generated = 1
    while found is None and frontier and frontier[0].depth < step_budget:
        nxt = []
        for node in frontier:
            for step, ax in _moves(node.graph, q, node.depth + 1, size_cap):
                env = {CUR: node.graph}
                if ax is not None:
                    env[AX] = SignedBiGraph.complete(q, "+", ax.names)
                try:
                    g = apply_step(step, env, q - 1).graph
                except OperationError:
                    continue
                if g.order() > size_cap:
                    continue
                h = invariant_hash(g)
                bucket = seen.setdefault(h, [])
                if any(find_isomorphism(g, other) is not None for other in bucket):
                    continue
                bucket.append(g)
                child = _Node(g, node, step, ax, node.depth + 1)
                generated += 1
                if find_isomorphism(g, target) is not None:
                    found = child
                    break
                nxt.append(child)
                if generated >= node_limit:
                    return None
            if found is not None:
                break
        frontier = nxt
    if found is None:
        return None

    chain = []
    node = found
    while node.parent is not None:
        chain.append(node)
        node = node.parent
    chain.reverse()
    bindings: list[tuple[str, Step]] = [("G0", Axiom(q))]
    cur = "G0"
    for i, node in enumerate(chain, 1):
        ax_name = None
        if node.axiom is not None:
            ax_name = f"A{i}"
            bindings.append((ax_name, node.axiom))
        name = f"G{i}"
        bindings.append((name, _bind(node.step, cur, ax_name)))
        cur = name
    script = DerivationScript(q, tuple(bindings), Target(cur, "iso", target_source, target))
    report = check(script)
    if not report.accepted:
        raise AssertionError("search produced a script the checker rejects:\n" + report.summary())
    return script
