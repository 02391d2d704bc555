"""Derivation scripts: named graphs built from ``(K_q,+)`` axioms by steps.

Text form, one statement per line, ``#`` starts a comment::

    sbd 1
    q 4
    let K = axiom 4
    let S = sb4 K v1
    let C = sb5odd S v1 v2 [pad: v3 v4 -]
    target C iso @Kpm3

Axioms may list their vertex names (``axiom 3 a b c``); without names the
vertices are ``v1 .. vN``. Targets name a binding, a match mode and a graph
source: an ``.sbg`` path (relative to the script) or a builtin
``@Kpos<n>``, ``@Kneg<n>``, ``@Kpm<n>``, ``@nabla<r>``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from ..core import Sign, SignedBiGraph
from ..hajos import (
    AddEdge,
    AddVertex,
    Axiom,
    Contract,
    Identify,
    RemoveVertex,
    Splice,
    SplicePrime,
    Step,
    Switch,
)
from ..sbg_format import FormatError, read_sbg
from ..structure import nabla_graph

MODES = ("exact", "iso", "switch-iso")
_BUILTIN = re.compile(r"@(Kpos|Kneg|Kpm|nabla)(\d+)$")
_NAME = re.compile(r"[^\s\[\],#]+$")


class ScriptError(FormatError):
    """A syntactically fine script that breaks a derivation rule."""


@dataclass(frozen=True)
class Target:
    name: str
    mode: str
    source: str | None
    graph: SignedBiGraph


@dataclass(frozen=True)
class DerivationScript:
    q: int
    bindings: tuple[tuple[str, Step], ...]
    target: Target | None = None

    def __post_init__(self):
        problem = validate(self)
        if problem:
            raise ValueError(problem)

    @property
    def names(self) -> list[str]:
        return [name for name, _ in self.bindings]


def validate(script: DerivationScript) -> str | None:
    """First structural problem with ``script``, or None."""
    if script.q < 1:
        return f"q must be positive, got {script.q}"
    seen: set[str] = set()
    for name, step in script.bindings:
        if name in seen:
            return f"graph {name!r} bound twice"
        for src in step.sources:
            if src not in seen:
                return f"{name!r} refers to {src!r} before it is bound"
        if isinstance(step, Axiom) and step.order != script.q:
            return f"axiom {name!r} has order {step.order}, expected q = {script.q}"
        seen.add(name)
    if script.target is not None:
        if script.target.name not in seen:
            return f"target {script.target.name!r} is not bound"
        if script.target.mode not in MODES:
            return f"unknown match mode {script.target.mode!r}"
    return None


def builtin_graph(source: str) -> SignedBiGraph | None:
    m = _BUILTIN.match(source)
    if not m:
        return None
    kind, n = m.group(1), int(m.group(2))
    if kind == "nabla":
        return nabla_graph(n)
    return SignedBiGraph.complete(n, {"Kpos": "+", "Kneg": "-", "Kpm": "pm"}[kind])


def load_target_graph(source: str, base_dir=None) -> SignedBiGraph:
    g = builtin_graph(source)
    if g is not None:
        return g
    path = Path(source)
    if not path.is_absolute() and base_dir is not None:
        path = Path(base_dir) / path
    return read_sbg(path)


# -- parsing ------------------------------------------------------------------

def tokens(line: str) -> list[str]:
    line = line.split("#", 1)[0]
    for ch in "[],":
        line = line.replace(ch, f" {ch} ")
    return line.split()


def _sign(tok: str, lineno: int) -> Sign:
    if tok not in ("+", "-"):
        raise FormatError(f"expected + or -, got {tok!r}", lineno)
    return Sign.parse(tok)


def _name(tok: str, lineno: int) -> str:
    if tok in ("+", "-") or not _NAME.match(tok):
        raise FormatError(f"bad name {tok!r}", lineno)
    return tok


def _bracket(toks: list[str], start: int, lineno: int, prefix: str | None = None):
    """Parse ``[ item , item ]`` starting at ``toks[start]``; returns (items, next)."""
    if start >= len(toks) or toks[start] != "[":
        raise FormatError("expected '['", lineno)
    try:
        end = toks.index("]", start)
    except ValueError:
        raise FormatError("missing ']'", lineno) from None
    inner = toks[start + 1:end]
    if prefix is not None:
        if not inner or inner[0] != prefix:
            raise FormatError(f"expected {prefix!r} after '['", lineno)
        inner = inner[1:]
    items: list[list[str]] = []
    if inner:
        cur: list[str] = []
        for tok in inner + [","]:
            if tok == ",":
                if not cur:
                    raise FormatError("empty list item", lineno)
                items.append(cur)
                cur = []
            else:
                cur.append(tok)
    return items, end + 1


def parse_step(kw: str, args: list[str], lineno: int | None = None) -> Step:
    """One step from its keyword and argument tokens (see :func:`tokens`)."""
    n = lambda t: _name(t, lineno)  # noqa: E731
    try:
        if kw == "axiom":
            try:
                order = int(args[0])
            except ValueError:
                raise FormatError(f"bad axiom order {args[0]!r}", lineno) from None
            names = tuple(n(t) for t in args[1:]) or None
            if names is not None and len(names) != order:
                raise FormatError(f"axiom of order {order} lists {len(names)} names", lineno)
            return Axiom(order, names)
        if kw == "sb1_vertex" and len(args) == 2:
            return AddVertex(n(args[0]), n(args[1]))
        if kw == "sb1_edge" and len(args) == 4:
            return AddEdge(n(args[0]), n(args[1]), n(args[2]), _sign(args[3], lineno))
        if kw == "sb2" and len(args) == 3:
            return Identify(n(args[0]), n(args[1]), n(args[2]))
        if kw == "sb3":
            items, nxt = _bracket(args, 2, lineno)
            rest = args[nxt:]
            if len(rest) != 3 or any(len(it) != 2 for it in items):
                raise FormatError("expected: sb3 A v [u s, ...] B x y", lineno)
            split = tuple((n(a), _sign(s, lineno)) for a, s in items)
            return Splice(n(args[0]), n(args[1]), split, n(rest[0]), n(rest[1]), n(rest[2]))
        if kw == "sb4" and len(args) == 2:
            return Switch(n(args[0]), n(args[1]))
        if kw == "sb5even" and len(args) == 2:
            return RemoveVertex(n(args[0]), n(args[1]))
        if kw == "sb5odd":
            pad: tuple = ()
            if len(args) > 3:
                items, nxt = _bracket(args, 3, lineno, prefix="pad:")
                if nxt != len(args) or any(len(it) != 3 for it in items):
                    raise FormatError("expected: sb5odd G u w [pad: a b s, ...]", lineno)
                pad = tuple((n(a), n(b), _sign(s, lineno)) for a, b, s in items)
            elif len(args) != 3:
                raise FormatError("expected: sb5odd G u w [pad: ...]", lineno)
            return Contract(n(args[0]), n(args[1]), n(args[2]), pad)
        if kw == "sb3p" and len(args) == 8:
            a, x1, y1, s1, b, x2, y2, s2 = args
            return SplicePrime(
                n(a), n(x1), n(y1), _sign(s1, lineno), n(b), n(x2), n(y2), _sign(s2, lineno)
            )
    except IndexError:
        pass
    raise FormatError(f"malformed {kw!r} step", lineno)


def parse_script(text: str, base_dir=None) -> DerivationScript:
    q = None
    bindings: list[tuple[str, Step]] = []
    bound: set[str] = set()
    target = None
    target_line = 0
    header = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        toks = tokens(raw)
        if not toks:
            continue
        if not header:
            if toks != ["sbd", "1"]:
                raise FormatError("expected header 'sbd 1'", lineno)
            header = True
            continue
        head = toks[0]
        if head == "q":
            if q is not None or bindings:
                raise FormatError("'q' must appear once, before any binding", lineno)
            if len(toks) != 2 or not toks[1].isdigit() or int(toks[1]) < 1:
                raise FormatError("expected: q <positive integer>", lineno)
            q = int(toks[1])
        elif head == "let":
            if q is None:
                raise FormatError("'q' must be declared before bindings", lineno)
            if len(toks) < 4 or toks[2] != "=":
                raise FormatError("expected: let <Name> = <step>", lineno)
            name = _name(toks[1], lineno)
            if name in bound:
                raise ScriptError(f"graph {name!r} bound twice", lineno)
            step = parse_step(toks[3], toks[4:], lineno)
            for src in step.sources:
                if src not in bound:
                    raise ScriptError(f"forward or unknown reference {src!r}", lineno)
            if isinstance(step, Axiom) and step.order != q:
                raise ScriptError(f"axiom order {step.order} differs from q = {q}", lineno)
            bindings.append((name, step))
            bound.add(name)
        elif head == "target":
            if target is not None:
                raise FormatError("only one target allowed", lineno)
            if len(toks) != 4 or toks[2] not in MODES:
                raise FormatError(f"expected: target <Name> <{'|'.join(MODES)}> <source>", lineno)
            try:
                graph = load_target_graph(toks[3], base_dir)
            except (OSError, FormatError) as exc:
                raise FormatError(f"cannot load target {toks[3]!r}: {exc}", lineno) from exc
            target = Target(toks[1], toks[2], toks[3], graph)
            target_line = lineno
        else:
            raise FormatError(f"unknown statement {head!r}", lineno)
    if not header:
        raise FormatError("missing header 'sbd 1'")
    if q is None:
        raise FormatError("missing 'q' declaration")
    if target is not None and target.name not in bound:
        raise ScriptError(f"target {target.name!r} is not bound", target_line)
    return DerivationScript(q, tuple(bindings), target)


# -- serialization ------------------------------------------------------------

def format_step(step: Step) -> str:
    kw = step.keyword
    if isinstance(step, Axiom):
        return " ".join([kw, str(step.order), *(step.names or ())])
    if isinstance(step, AddVertex):
        return f"{kw} {step.src} {step.name}"
    if isinstance(step, AddEdge):
        return f"{kw} {step.src} {step.u} {step.v} {step.sign}"
    if isinstance(step, Identify):
        return f"{kw} {step.src} {step.u} {step.v}"
    if isinstance(step, Splice):
        split = ", ".join(f"{w} {s}" for w, s in step.split)
        return f"{kw} {step.a} {step.v} [{split}] {step.b} {step.x} {step.y}"
    if isinstance(step, (Switch, RemoveVertex)):
        return f"{kw} {step.src} {step.v}"
    if isinstance(step, Contract):
        pad = ", ".join(f"{a} {b} {s}" for a, b, s in step.pad)
        return f"{kw} {step.src} {step.u} {step.w} [pad:{' ' + pad if pad else ''}]"
    if isinstance(step, SplicePrime):
        return (
            f"{kw} {step.a} {step.x1} {step.y1} {step.s1} "
            f"{step.b} {step.x2} {step.y2} {step.s2}"
        )
    raise TypeError(f"not a step: {step!r}")


def serialize_script(script: DerivationScript) -> str:
    lines = ["sbd 1", f"q {script.q}"]
    for name, step in script.bindings:
        lines.append(f"let {name} = {format_step(step)}")
    if script.target is not None:
        t = script.target
        if t.source is None:
            raise ValueError("target has no source to serialize")
        lines.append(f"target {t.name} {t.mode} {t.source}")
    return "\n".join(lines) + "\n"
