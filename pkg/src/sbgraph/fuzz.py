"""Seeded random signed bi-graphs and the closure fuzz harness.

Random model: each vertex pair is joined with probability ``density``; a
joined pair is a {+,-} parallel pair with probability ``pair_weight`` and
otherwise a single edge of uniformly random sign. Both parameters are drawn
per graph. Graphs for the closure harness are rejection-sampled until they
are not q-colorable.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable

from .coloring import exists_k_coloring
from .core import Sign, SignedBiGraph
from .hajos import (
    OperationError,
    sb1_add,
    sb2_identify,
    sb3_prime,
    sb3_splice,
    sb4_switch,
    sb5_even,
    sb5_odd,
)

OPS = ("sb1", "sb2", "sb3", "sb3p", "sb4", "sb5")
MAX_ATTEMPTS = 5000


def random_bigraph(rng: random.Random, n: int, density: float | None = None,
                   pair_weight: float | None = None, prefix: str = "v") -> SignedBiGraph:
    names = [f"{prefix}{i}" for i in range(1, n + 1)]
    p = rng.uniform(0.3, 1.0) if density is None else density
    w = rng.uniform(0.0, 0.8) if pair_weight is None else pair_weight
    edges = []
    for u, v in combinations(names, 2):
        if rng.random() < p:
            if rng.random() < w:
                edges += [(u, v, Sign.POS), (u, v, Sign.NEG)]
            else:
                edges.append((u, v, rng.choice((Sign.POS, Sign.NEG))))
    return SignedBiGraph(names, edges)


def random_multigraph(rng: random.Random, n: int, max_edges: int = 12):
    """Vertex names and a loopless signed edge multiset (repeats likely)."""
    names = [f"v{i}" for i in range(1, n + 1)]
    if n < 2:
        return names, []
    edges = []
    for _ in range(rng.randint(0, max_edges)):
        u, v = rng.sample(names, 2)
        edges.append((u, v, rng.choice((Sign.POS, Sign.NEG))))
    return names, edges


def random_non_colorable(rng: random.Random, n_max: int, q: int, prefix: str = "v",
                         require: Callable[[SignedBiGraph], bool] | None = None) -> SignedBiGraph | None:
    """A random graph on at most ``n_max`` vertices that is not q-colorable.

    Returns None if ``MAX_ATTEMPTS`` draws all fail.
    """
    n_min = 2
    while 2 * n_min - 2 <= q:
        n_min += 1
    if n_min > n_max:
        return None
    for _ in range(MAX_ATTEMPTS):
        g = random_bigraph(rng, rng.randint(n_min, n_max), prefix=prefix)
        if require is not None and not require(g):
            continue
        if exists_k_coloring(g, q) is None:
            return g
    return None


@dataclass
class Case:
    op: str
    inputs: list[SignedBiGraph]
    params: dict
    run: Callable[[list[SignedBiGraph]], SignedBiGraph]


@dataclass
class OpStats:
    trials: int = 0
    skipped: int = 0
    violations: int = 0
    counterexample: Case | None = None


@dataclass
class FuzzSummary:
    n: int
    q: int
    trials: int
    seed: int
    stats: dict[str, OpStats] = field(default_factory=dict)

    @property
    def violations(self) -> int:
        return sum(s.violations for s in self.stats.values())


def _positive_edges(g):
    return [(u, v) for u, v, ss in g.pairs() if Sign.POS in ss]


def _make_case(op: str, rng: random.Random, n: int, q: int) -> Case | None:
    """Draw inputs and parameters for one application of ``op``."""
    if op == "sb1":
        g = random_non_colorable(rng, n, q)
        if g is None:
            return None
        adds: list = []
        h = g
        for _ in range(rng.randint(1, 3)):
            missing = [(u, v, s) for u, v in combinations(h.vertices, 2)
                       for s in (Sign.POS, Sign.NEG) if s not in h.signs(u, v)]
            if rng.random() < 0.3 or not missing:
                item = f"x{len(adds)}"
                h = h.add_vertex(item)
            else:
                item = rng.choice(missing)
                h = h.add_signed_edge(*item)
            adds.append(item)
        return Case(op, [g], {"additions": adds}, lambda gs: sb1_add(gs[0], adds).graph)

    if op == "sb2":
        g = random_non_colorable(rng, n, q, require=lambda h: any(
            not h.signs(u, v) for u, v in combinations(h.vertices, 2)))
        if g is None:
            return None
        u, v = rng.choice([(u, v) for u, v in combinations(g.vertices, 2) if not g.signs(u, v)])
        return Case(op, [g], {"u": u, "v": v}, lambda gs: sb2_identify(gs[0], u, v).graph)

    if op == "sb3":
        g1 = random_non_colorable(rng, n, q, prefix="a")
        g2 = random_non_colorable(rng, n, q, prefix="b", require=lambda h: bool(_positive_edges(h)))
        if g1 is None or g2 is None:
            return None
        v = rng.choice(g1.vertices)
        split = [e for e in g1.incident(v) if rng.random() < 0.5]
        x, y = rng.choice(_positive_edges(g2))
        if rng.random() < 0.5:
            x, y = y, x
        params = {"v": v, "split": split, "x": x, "y": y}
        return Case(op, [g1, g2], params, lambda gs: sb3_splice(gs[0], v, split, gs[1], x, y).graph)

    if op == "sb3p":
        g1 = random_non_colorable(rng, n, q, prefix="a")
        g2 = random_non_colorable(rng, n, q, prefix="b")
        if g1 is None or g2 is None:
            return None
        e1, e2 = rng.choice(list(g1.edges())), rng.choice(list(g2.edges()))
        if rng.random() < 0.5:
            e1 = (e1.v, e1.u, e1.sign)
        if rng.random() < 0.5:
            e2 = (e2.v, e2.u, e2.sign)
        return Case(op, [g1, g2], {"e1": tuple(e1), "e2": tuple(e2)},
                    lambda gs: sb3_prime(gs[0], e1, gs[1], e2).graph)

    if op == "sb4":
        g = random_non_colorable(rng, n, q)
        if g is None:
            return None
        v = rng.choice(g.vertices)
        return Case(op, [g], {"v": v}, lambda gs: sb4_switch(gs[0], v).graph)

    if op == "sb5":
        if q % 2 == 0:
            def low(h):
                return [v for v in h.vertices if len(h.neighbors(v)) <= q // 2]
            g = random_non_colorable(rng, n, q, require=lambda h: bool(low(h)))
            if g is None:
                return None
            v = rng.choice(low(g))
            return Case(op, [g], {"v": v, "q": q}, lambda gs: sb5_even(gs[0], v, q).graph)
        if q < 3:
            return None

        def lone(h):
            return [(u, w) for u, w, ss in h.pairs() if ss == frozenset((Sign.NEG,))]
        g = random_non_colorable(rng, n, q, require=lambda h: bool(lone(h)))
        if g is None:
            return None
        u, w = rng.choice(lone(g))
        pad = _random_pad(rng, g, u, w, (q - 3) // 2)
        return Case(op, [g], {"u": u, "w": w, "q": q, "pad": pad},
                    lambda gs: sb5_odd(gs[0], u, w, q, pad).graph)
    raise ValueError(f"unknown operation {op!r}")


def _random_pad(rng, g, u, w, k):
    """Pad edges leaving a random matching of at most ``k`` single pairs."""
    h = g.remove_edge(u, w, Sign.NEG).identify_vertices(u, w)
    light = [(a, b) for a, b in combinations(h.vertices, 2) if h.multiplicity(a, b) < 2]
    rng.shuffle(light)
    keep, used = set(), set()
    for a, b in light:
        if len(keep) < k and a not in used and b not in used and rng.random() < 0.7:
            keep.add((a, b))
            used.update((a, b))
    pad = []
    for a, b in combinations(h.vertices, 2):
        have = h.signs(a, b)
        if (a, b) in keep:
            if not have:
                pad.append((a, b, rng.choice((Sign.POS, Sign.NEG))))
            continue
        pad += [(a, b, s) for s in (Sign.POS, Sign.NEG) if s not in have]
    return pad


def _violates(case: Case, q: int) -> bool:
    try:
        out = case.run(case.inputs)
    except OperationError:
        return False
    return exists_k_coloring(out, q) is not None


def shrink(case: Case, q: int) -> Case:
    """Greedily delete edges from the inputs while the violation persists."""
    inputs = list(case.inputs)
    changed = True
    while changed:
        changed = False
        for i, g in enumerate(inputs):
            for e in list(g.edges()):
                smaller = g.remove_edge(*e)
                trial = inputs[:i] + [smaller] + inputs[i + 1:]
                if exists_k_coloring(smaller, q) is not None:
                    continue
                if _violates(Case(case.op, trial, case.params, case.run), q):
                    inputs, g, changed = trial, smaller, True
    return Case(case.op, inputs, case.params, case.run)


def fuzz_closure(n: int, q: int, trials: int, seed: int, ops=OPS) -> FuzzSummary:
    """Apply each operation ``trials`` times to random non-q-colorable inputs
    and count outputs that turn out q-colorable."""
    summary = FuzzSummary(n, q, trials, seed)
    for op in ops:
        rng = random.Random(f"{seed}:{op}:{n}:{q}")
        st = summary.stats[op] = OpStats()
        for _ in range(trials):
            case = _make_case(op, rng, n, q)
            if case is None:
                st.skipped += 1
                continue
            try:
                case.run(case.inputs)
            except OperationError:
                st.skipped += 1
                continue
            st.trials += 1
            if _violates(case, q):
                st.violations += 1
                if st.counterexample is None:
                    st.counterexample = shrink(case, q)
    return summary

