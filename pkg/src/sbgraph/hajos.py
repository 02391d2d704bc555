"""The five closure operations on signed bi-graphs, the derived two-edge
splice, and step records that name operands by binding.

Each ``sbN_*`` function validates its preconditions, raises
:class:`OperationError` on violation, and otherwise returns an
:class:`OpResult`. Inputs are never modified.

The ``q`` taken by the (sb5) variants is the colour count of the class being
preserved: the operation maps non-q-colorable graphs to non-q-colorable
graphs. A derivation from ``(K_q,+)`` therefore runs them with ``q - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import ClassVar, Iterable, Mapping, Sequence, Union

from .core import Edge, GraphError, Sign, SignedBiGraph
from .signatures import switch_at
from .structure import is_k_thin


class OperationError(GraphError):
    """An operation's precondition does not hold."""


@dataclass(frozen=True)
class OpResult:
    graph: SignedBiGraph
    op: str
    params: dict = field(default_factory=dict, compare=False)
    aliases: dict = field(default_factory=dict)
    coalesced: tuple = ()


def _merge(g: SignedBiGraph, keep: str, gone: str):
    """Identify ``gone`` into ``keep`` and report collapsed duplicates."""
    dup = tuple(
        Edge(keep, w, s)
        for w, ss in g.adjacency()[gone].items()
        for s in ss
        if s in g.adjacency()[keep].get(w, ())
    )
    return g.identify_vertices(keep, gone), dup


def _wrap(fn, *args):
    try:
        return fn(*args)
    except OperationError:
        raise
    except GraphError as exc:
        raise OperationError(str(exc)) from exc


# -- (sb1) ------------------------------------------------------------------

Addition = Union[str, tuple]


def sb1_add(g: SignedBiGraph, additions: Iterable[Addition]) -> OpResult:
    """Add vertices (given as names) and signed edges (given as ``(u, v, sign)``)."""
    additions = list(additions)
    out = g
    for item in additions:
        if isinstance(item, str):
            out = _wrap(out.add_vertex, item)
        else:
            u, v, s = item
            out = _wrap(out.add_signed_edge, u, v, Sign.parse(s))
    return OpResult(out, "sb1", {"additions": additions})


# -- (sb2) ------------------------------------------------------------------

def sb2_identify(g: SignedBiGraph, u: str, v: str) -> OpResult:
    if u in g and v in g and u != v and g.multiplicity(u, v):
        raise OperationError(f"{u!r} and {v!r} are adjacent")
    out, dup = _wrap(_merge, g, u, v)
    return OpResult(out, "sb2", {"u": u, "v": v}, {v: u}, dup)


# -- (sb3) ------------------------------------------------------------------

def sb3_splice(
    g1: SignedBiGraph,
    v: str,
    split: Iterable[tuple[str, Sign]],
    g2: SignedBiGraph,
    x: str,
    y: str,
) -> OpResult:
    """Split ``v`` of ``g1`` into two, glue the halves onto the ends of the
    positive edge ``xy`` of ``g2`` and delete that edge.

    ``split`` lists the edges of ``v`` (far end, sign) that go to the
    ``x`` half; the rest go to ``y``. The empty split is allowed.
    """
    split = [(w, Sign.parse(s)) for w, s in split]
    if v not in g1:
        raise OperationError(f"unknown vertex {v!r}")
    shared = set(g1.vertices) & set(g2.vertices)
    if shared:
        raise OperationError(f"graphs are not vertex-disjoint: {sorted(shared)}")
    if not g2.has_edge(x, y, Sign.POS):
        raise OperationError(f"no positive edge between {x!r} and {y!r}")
    incident = set(g1.incident(v))
    for item in split:
        if item not in incident:
            raise OperationError(f"split edge {v}{item[0]}({item[1]}) is not incident to {v!r}")
    if len(set(split)) != len(split):
        raise OperationError("split lists an edge twice")
    to_x = set(split)
    out = g1.remove_vertex(v).union(g2.remove_edge(x, y, Sign.POS))
    for w, s in g1.incident(v):
        out = out.add_signed_edge(x if (w, s) in to_x else y, w, s)
    params = {"v": v, "split": tuple(split), "x": x, "y": y}
    return OpResult(out, "sb3", params, {v: f"{x}|{y}"})


# -- (sb4) ------------------------------------------------------------------

def sb4_switch(g: SignedBiGraph, v: str) -> OpResult:
    return OpResult(_wrap(switch_at, g, v), "sb4", {"v": v})


# -- (sb5) ------------------------------------------------------------------

def sb5_even(g: SignedBiGraph, v: str, q: int) -> OpResult:
    """Delete a vertex with at most q/2 neighbours (q even)."""
    if q % 2 or q < 2:
        raise OperationError(f"vertex removal needs even q >= 2, got {q}")
    if v not in g:
        raise OperationError(f"unknown vertex {v!r}")
    deg = len(g.neighbors(v))
    if deg > q // 2:
        raise OperationError(f"{v!r} has {deg} neighbours, more than q/2 = {q // 2}")
    return OpResult(g.remove_vertex(v), "sb5", {"v": v, "q": q})


def sb5_odd(g: SignedBiGraph, u: str, w: str, q: int, pad: Iterable = ()) -> OpResult:
    """Contract a lone negative edge ``uw`` (q odd), then add ``pad``.

    The result must be ``(q-3)/2``-thin; ``u``'s name survives the merge.
    """
    pad = [(a, b, Sign.parse(s)) for a, b, s in pad]
    if q % 2 == 0 or q < 3:
        raise OperationError(f"edge contraction needs odd q >= 3, got {q}")
    if u not in g or w not in g or u == w:
        raise OperationError(f"bad edge ends {u!r}, {w!r}")
    ss = g.signs(u, w)
    if Sign.NEG not in ss:
        raise OperationError(f"no negative edge between {u!r} and {w!r}")
    if len(ss) != 1:
        raise OperationError(f"{u!r} and {w!r} are joined by other edges too")
    out, dup = _merge(g.remove_edge(u, w, Sign.NEG), u, w)
    for a, b, s in pad:
        out = _wrap(out.add_signed_edge, a, b, s)
    k = (q - 3) // 2
    if not is_k_thin(out, k):
        raise OperationError(f"result is not {k}-thin")
    return OpResult(out, "sb5", {"u": u, "w": w, "q": q, "pad": tuple(pad)}, {w: u}, dup)


def suggest_pad(g: SignedBiGraph, u: str, w: str, q: int) -> list[tuple[str, str, Sign]]:
    """A small pad making the contraction of ``uw`` ``(q-3)/2``-thin.

    Greedy: keep up to (q-3)/2 disjoint single edges, fill everything else.
    """
    h, _ = _merge(g.remove_edge(u, w, Sign.NEG), u, w)
    budget = (q - 3) // 2
    used: set[str] = set()
    pad = []
    adj = h.adjacency()
    verts = h.vertices
    for i, a in enumerate(verts):
        for b in verts[i + 1:]:
            have = adj[a].get(b, frozenset())
            if len(have) == 2:
                continue
            if len(have) == 1 and budget > 0 and a not in used and b not in used:
                budget -= 1
                used.update((a, b))
                continue
            for s in (Sign.POS, Sign.NEG):
                if s not in have:
                    pad.append((a, b, s))
    return pad


# -- (sb3') -----------------------------------------------------------------

def sb3_prime(
    g1: SignedBiGraph,
    e1: tuple[str, str, Sign],
    g2: SignedBiGraph,
    e2: tuple[str, str, Sign],
) -> OpResult:
    """Remove ``e1 = x1y1`` and ``e2 = x2y2``, identify ``x1`` with ``x2``
    and join ``y1y2`` with the product of the two removed signs."""
    x1, y1, s1 = e1[0], e1[1], Sign.parse(e1[2])
    x2, y2, s2 = e2[0], e2[1], Sign.parse(e2[2])
    shared = set(g1.vertices) & set(g2.vertices)
    if shared:
        raise OperationError(f"graphs are not vertex-disjoint: {sorted(shared)}")
    if not g1.has_edge(x1, y1, s1):
        raise OperationError(f"edge {x1}{y1}({s1}) not in the first graph")
    if not g2.has_edge(x2, y2, s2):
        raise OperationError(f"edge {x2}{y2}({s2}) not in the second graph")
    out = g1.remove_edge(x1, y1, s1).union(g2.remove_edge(x2, y2, s2))
    out, dup = _merge(out, x1, x2)
    out = out.add_signed_edge(y1, y2, s1 * s2)
    params = {"e1": (x1, y1, s1), "e2": (x2, y2, s2)}
    return OpResult(out, "sb3p", params, {x2: x1}, dup)


# -- step records -------------------------------------------------------------

@dataclass(frozen=True)
class Axiom:
    keyword: ClassVar[str] = "axiom"
    order: int
    names: tuple[str, ...] | None = None

    @property
    def sources(self):
        return ()


@dataclass(frozen=True)
class AddVertex:
    keyword: ClassVar[str] = "sb1_vertex"
    src: str
    name: str

    @property
    def sources(self):
        return (self.src,)


@dataclass(frozen=True)
class AddEdge:
    keyword: ClassVar[str] = "sb1_edge"
    src: str
    u: str
    v: str
    sign: Sign

    @property
    def sources(self):
        return (self.src,)


@dataclass(frozen=True)
class Identify:
    keyword: ClassVar[str] = "sb2"
    src: str
    u: str
    v: str

    @property
    def sources(self):
        return (self.src,)


@dataclass(frozen=True)
class Splice:
    keyword: ClassVar[str] = "sb3"
    a: str
    v: str
    split: tuple[tuple[str, Sign], ...]
    b: str
    x: str
    y: str

    @property
    def sources(self):
        return (self.a, self.b)


@dataclass(frozen=True)
class Switch:
    keyword: ClassVar[str] = "sb4"
    src: str
    v: str

    @property
    def sources(self):
        return (self.src,)


@dataclass(frozen=True)
class RemoveVertex:
    keyword: ClassVar[str] = "sb5even"
    src: str
    v: str

    @property
    def sources(self):
        return (self.src,)


@dataclass(frozen=True)
class Contract:
    keyword: ClassVar[str] = "sb5odd"
    src: str
    u: str
    w: str
    pad: tuple[tuple[str, str, Sign], ...] = ()

    @property
    def sources(self):
        return (self.src,)


@dataclass(frozen=True)
class SplicePrime:
    keyword: ClassVar[str] = "sb3p"
    a: str
    x1: str
    y1: str
    s1: Sign
    b: str
    x2: str
    y2: str
    s2: Sign

    @property
    def sources(self):
        return (self.a, self.b)


Step = Union[Axiom, AddVertex, AddEdge, Identify, Splice, Switch, RemoveVertex, Contract, SplicePrime]


def apply_step(step: Step, env: Mapping[str, SignedBiGraph], q: int) -> OpResult:
    """Run ``step`` against the graphs bound in ``env``.

    ``q`` is the preserved colour class for the (sb5) variants; an axiom
    yields ``(K_order, +)``.
    """
    for name in step.sources:
        if name not in env:
            raise OperationError(f"unbound graph {name!r}")
    if isinstance(step, Axiom):
        try:
            g = SignedBiGraph.complete(step.order, "+", step.names)
        except GraphError as exc:
            raise OperationError(str(exc)) from exc
        return OpResult(g, "axiom", {"order": step.order})
    if isinstance(step, AddVertex):
        return sb1_add(env[step.src], [step.name])
    if isinstance(step, AddEdge):
        return sb1_add(env[step.src], [(step.u, step.v, step.sign)])
    if isinstance(step, Identify):
        return sb2_identify(env[step.src], step.u, step.v)
    if isinstance(step, Splice):
        return sb3_splice(env[step.a], step.v, step.split, env[step.b], step.x, step.y)
    if isinstance(step, Switch):
        return sb4_switch(env[step.src], step.v)
    if isinstance(step, RemoveVertex):
        return sb5_even(env[step.src], step.v, q)
    if isinstance(step, Contract):
        return sb5_odd(env[step.src], step.u, step.w, q, step.pad)
    if isinstance(step, SplicePrime):
        return sb3_prime(
            env[step.a], (step.x1, step.y1, step.s1), env[step.b], (step.x2, step.y2, step.s2)
        )
    raise TypeError(f"not a step: {step!r}")


def decompose_sb3_prime(
    g1: SignedBiGraph,
    e1: tuple[str, str, Sign],
    g2: SignedBiGraph,
    e2: tuple[str, str, Sign],
    a: str = "A",
    b: str = "B",
) -> list[tuple[str, Step]]:
    """Express ``sb3_prime`` through (sb3) and (sb4) alone.

    Returns ``(name, step)`` bindings over input names ``a`` and ``b``; the
    last binding is the result. With ``e1`` positive, ``x2`` is split so
    that ``e2`` lands on ``y1`` and everything else on ``x1``, consuming
    ``e1``. With ``e1`` negative, switch at ``x1`` and ``x2`` first, which
    makes ``e1`` positive and flips ``e2``, then switch back at the merged
    vertex.
    """
    x1, y1, s1 = e1[0], e1[1], Sign.parse(e1[2])
    x2, y2, s2 = e2[0], e2[1], Sign.parse(e2[2])
    sb3_prime(g1, (x1, y1, s1), g2, (x2, y2, s2))  # validates
    out: list[tuple[str, Step]] = []
    left, right, s2_now = a, b, s2
    if s1 is Sign.NEG:
        out.append((f"{a}_sw", Switch(a, x1)))
        out.append((f"{b}_sw", Switch(b, x2)))
        left, right, s2_now = f"{a}_sw", f"{b}_sw", -s2
    out.append(("spliced", Splice(right, x2, ((y2, s2_now),), left, y1, x1)))
    if s1 is Sign.NEG:
        out.append(("result", Switch("spliced", x1)))
    return out


def run_bindings(
    bindings: Sequence[tuple[str, Step]], env: Mapping[str, SignedBiGraph], q: int = 0
) -> SignedBiGraph:
    """Execute bindings in order and return the last graph."""
    env = dict(env)
    last = None
    for name, step in bindings:
        last = env[name] = apply_step(step, env, q).graph
    return last
