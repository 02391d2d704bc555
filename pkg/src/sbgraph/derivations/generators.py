"""Scripts that carry out the two construction lemmas step by step.

* :func:`gen_lemma_bicomplete` derives ``(K_r, ±)`` from ``(K_{2r-2}, +)``.
* :func:`gen_lemma_nabla` derives the nabla-complete graph of order ``3r``
  from ``r + 1`` copies of ``(K_{2r+1}, +)``.
"""

from __future__ import annotations

from itertools import combinations

from ..core import Sign, SignedBiGraph
from ..hajos import (
    AddEdge,
    Axiom,
    Contract,
    Identify,
    RemoveVertex,
    SplicePrime,
    Step,
    Switch,
    apply_step,
)
from ..signatures import are_switch_equivalent
from ..structure import nabla_graph
from .script import DerivationScript, Target, builtin_graph


def completion_steps(
    g: SignedBiGraph, target: SignedBiGraph, src: str, prefix: str = "T"
) -> list[tuple[str, Step]]:
    """(sb1) edge additions followed by (sb4) switches turning ``g`` into
    ``target``, both on the same vertex names.

    Raises ValueError when ``target`` is not reachable that way.
    """
    if set(g.vertices) != set(target.vertices):
        raise ValueError("vertex sets differ")
    out: list[tuple[str, Step]] = []
    cur, cur_name = g, src
    ga, ta = g.adjacency(), target.adjacency()
    for u, v in combinations(g.vertices, 2):
        have, want = ga[u].get(v, frozenset()), ta[u].get(v, frozenset())
        if len(want) == 2:
            for s in (Sign.POS, Sign.NEG):
                if s not in have:
                    name = f"{prefix}{len(out) + 1}"
                    out.append((name, AddEdge(cur_name, u, v, s)))
                    cur, cur_name = cur.add_signed_edge(u, v, s), name
        elif len(want) != len(have):
            raise ValueError(f"pair {u}{v} cannot go from {len(have)} to {len(want)} edges")
    switches = are_switch_equivalent(cur, target)
    if switches is None:
        raise ValueError("no switching reaches the target")
    for v in (w for w in g.vertices if w in switches):
        name = f"{prefix}{len(out) + 1}"
        out.append((name, Switch(cur_name, v)))
        cur_name = name
    return out


def _run(bindings, q):
    env: dict[str, SignedBiGraph] = {}
    for name, step in bindings:
        env[name] = apply_step(step, env, q).graph
    return env


def gen_lemma_nabla(r: int) -> DerivationScript:
    """Derivation of the nabla-complete graph of order ``3r``.

    Copy ``i`` of ``(K_{2r+1}, +)`` has vertices ``h{i}.0 .. h{i}.{2r}``.
    For each ``j``: switch at ``h0.j``; splice copy 0 and copy ``j`` on the
    edges ``h0.j h0.{j+r}`` and ``h{j}.0 h{j}.{2j}`` identifying ``h0.j``
    with ``h{j}.0``; identify ``h0.j`` with ``h0.{j+r}``. Then ``h0.0`` has
    ``r`` neighbours and is removed (q = 2r). Then vertex ``k`` of all
    copies ``1..r`` is identified into ``h1.k``. What remains splits into
    the unbalanced triangles ``{h0.j, h1.{2j-1}, h1.{2j}}``; the missing
    cross edges are added and one switching makes every triangle negative.
    """
    if r < 1:
        raise ValueError(f"r must be at least 1, got {r}")
    q = 2 * r + 1
    names = lambda i: tuple(f"h{i}.{k}" for k in range(2 * r + 1))  # noqa: E731
    b: list[tuple[str, Step]] = [(f"H{i}", Axiom(q, names(i))) for i in range(r + 1)]
    cur = "H0"
    for j in range(1, r + 1):
        x1, y1 = f"h0.{j}", f"h0.{j + r}"
        b.append((f"S{j}", Switch(cur, x1)))
        b.append((f"P{j}", SplicePrime(f"S{j}", x1, y1, Sign.NEG, f"H{j}", f"h{j}.0", f"h{j}.{2 * j}", Sign.POS)))
        b.append((f"G{j}", Identify(f"P{j}", x1, y1)))
        cur = f"G{j}"
    b.append(("R", RemoveVertex(cur, "h0.0")))
    cur = "R"
    for k in range(1, 2 * r + 1):
        for i in range(2, r + 1):
            name = f"I{k}_{i}"
            b.append((name, Identify(cur, f"h1.{k}", f"h{i}.{k}")))
            cur = name

    g = _run(b, q - 1)[cur]
    order = []
    for j in range(1, r + 1):
        order += [f"h0.{j}", f"h1.{2 * j - 1}", f"h1.{2 * j}"]
    tail = completion_steps(g, nabla_graph(r, order), cur)
    b += tail
    last = tail[-1][0] if tail else cur
    return DerivationScript(q, tuple(b), Target(last, "iso", f"@nabla{r}", builtin_graph(f"@nabla{r}")))


def gen_lemma_bicomplete(r: int) -> DerivationScript:
    """Derivation of ``(K_r, ±)`` from ``(K_{2r-2}, +)``, for ``r >= 3``.

    Switch at ``v1`` and contract ``v1v2`` (q = 2r-3), padding every pair
    among ``v3 ..`` with a negative edge except ``v3v4, v5v6, ..,
    v_{2r-5}v_{2r-4}``. Then for ``i = 2 .. r-2`` switch at ``v_{2i}`` and
    contract ``v_{2i-1}v_{2i}`` with no padding.
    """
    if r < 3:
        raise ValueError(f"the construction needs r >= 3, got {r}")
    q = 2 * r - 2
    v = lambda i: f"v{i}"  # noqa: E731
    b: list[tuple[str, Step]] = [("K", Axiom(q)), ("S1", Switch("K", "v1"))]
    thin_pairs = {(v(2 * i - 1), v(2 * i)) for i in range(2, r - 1)}
    pad = tuple(
        (v(a), v(c), Sign.NEG)
        for a, c in combinations(range(3, q + 1), 2)
        if (v(a), v(c)) not in thin_pairs
    )
    b.append(("C1", Contract("S1", "v1", "v2", pad)))
    for i in range(2, r - 1):
        b.append((f"S{i}", Switch(f"C{i - 1}", v(2 * i))))
        b.append((f"C{i}", Contract(f"S{i}", v(2 * i - 1), v(2 * i))))
    last = b[-1][0]
    return DerivationScript(q, tuple(b), Target(last, "iso", f"@Kpm{r}", builtin_graph(f"@Kpm{r}")))
